#include <catch2/catch_amalgamated.hpp>
#include "pfaffell/pfaffell.hpp"
TEST_CASE("placeholder test_curve_solver") { REQUIRE(true); }
