#ifndef PFAFFELL_PFAFFELL_HPP
#define PFAFFELL_PFAFFELL_HPP

// Umbrella header for the elliptic dPfaff-KP / dPfaff-Toda toolkit.

#include "pfaffell/curve_solver.hpp"
#include "pfaffell/elliptic.hpp"
#include "pfaffell/equations.hpp"
#include "pfaffell/errors.hpp"
#include "pfaffell/extract.hpp"
#include "pfaffell/identities.hpp"
#include "pfaffell/model_io.hpp"
#include "pfaffell/numerics.hpp"
#include "pfaffell/operators.hpp"
#include "pfaffell/reduction.hpp"
#include "pfaffell/report.hpp"
#include "pfaffell/search.hpp"
#include "pfaffell/series.hpp"
#include "pfaffell/tau_model.hpp"
#include "pfaffell/theta.hpp"

#endif // PFAFFELL_PFAFFELL_HPP
