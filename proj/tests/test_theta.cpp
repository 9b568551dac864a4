#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pfaffell/numerics.hpp"
#include "pfaffell/theta.hpp"
#include "oracles.hpp"

using namespace pfaffell;

namespace {

complex random_u(CounterRng& rng, double t, double re_span, double im_span) {
    return complex(rng.uniform(-re_span, re_span), rng.uniform(-im_span * t, im_span * t));
}

} // namespace

TEST_CASE("theta matches the direct-summation oracle across the lattice") {
    for (double t : {1.0, 1.3, 2.0, 3.0}) {
        const ModularParam tau(t);
        for (std::uint64_t i = 0; i < 100; ++i) {
            CounterRng rng(1, stream_id(10, static_cast<std::uint64_t>(t * 16), i));
            // deliberately outside the fundamental cell to exercise reduction
            const complex u = random_u(rng, t, 2.5, 2.0);
            for (int a = 1; a <= 4; ++a) {
                const complex got = theta(a, u, tau);
                const complex want = oracles::theta_direct(a, u, t);
                REQUIRE(rel_residual(got, want) < 1e-13);
            }
        }
    }
}

TEST_CASE("theta_1 vanishes at the origin") {
    REQUIRE(theta(1, complex(0.0, 0.0), ModularParam(1.0)) == complex(0.0, 0.0));
}

TEST_CASE("theta_3(0|i) agrees with the oracle to 1e-14") {
    const complex got = theta(3, complex(0.0, 0.0), ModularParam(1.0));
    const complex want = oracles::theta_direct(3, complex(0.0, 0.0), 1.0);
    REQUIRE(std::abs(got - want) < 1e-14);
}

TEST_CASE("half-period shift theta_1(u + 1/2) = theta_2(u)") {
    const ModularParam tau(1.3);
    const complex got = theta(1, complex(0.5, 0.0), tau);
    const complex want = theta(2, complex(0.0, 0.0), tau);
    REQUIRE(std::abs(got - want) < 1e-12);
    // and against the oracle at a generic point
    const complex u(0.23, 0.41);
    REQUIRE(rel_residual(theta(1, u + 0.5, tau), oracles::theta_direct(2, u, 1.3)) < 1e-13);
}

TEST_CASE("theta index is understood modulo 4") {
    const ModularParam tau(1.2);
    const complex u(0.3, 0.2);
    REQUIRE(theta(5, u, tau) == theta(1, u, tau));
    REQUIRE(theta(8, u, tau) == theta(4, u, tau));
    REQUIRE(theta(0, u, tau) == theta(4, u, tau));
    REQUIRE(theta(-1, u, tau) == theta(3, u, tau));
}

TEST_CASE("theta_deriv against the oracle and finite differences") {
    const ModularParam tau(1.2);
    SECTION("theta_1'(0) equals pi theta_2 theta_3 theta_4") {
        for (double t : {1.0, 1.5, 2.0, 3.0}) {
            const ThetaConstants c = theta_constants(ModularParam(t));
            REQUIRE(rel_residual(c.th1_prime, pi * c.th2 * c.th3 * c.th4) < 1e-12);
        }
    }
    SECTION("theta_2 is even, so its derivative vanishes at 0") {
        REQUIRE(std::abs(theta_deriv(2, complex(0.0, 0.0), ModularParam(1.5), 1)) < 1e-15);
    }
    SECTION("first derivative vs central difference") {
        const complex u(0.2, 0.1);
        const complex fd =
            central_diff([&](complex x) { return theta(3, x, tau); }, u, 1e-5);
        REQUIRE(std::abs(theta_deriv(3, u, tau, 1) - fd) < 1e-7);
    }
    SECTION("orders 1..4 vs the term-wise oracle, on and off the cell") {
        for (std::uint64_t i = 0; i < 40; ++i) {
            CounterRng rng(3, stream_id(11, i));
            const complex u = random_u(rng, tau.t, 1.8, 1.4);
            for (int a = 1; a <= 4; ++a) {
                for (int d = 1; d <= 4; ++d) {
                    const complex got = theta_deriv(a, u, tau, d);
                    const complex want = oracles::theta_deriv_direct(a, u, tau.t, d);
                    REQUIRE(rel_residual(got, want) < 1e-12);
                }
            }
        }
    }
    SECTION("unsupported order") {
        REQUIRE_THROWS_AS(theta_deriv(1, complex(0.1, 0.0), tau, 5), unsupported_order_error);
        REQUIRE_THROWS_AS(theta_deriv(1, complex(0.1, 0.0), tau, 0), unsupported_order_error);
    }
}

TEST_CASE("theta constants") {
    SECTION("self-dual point: theta_2(0|i) = theta_4(0|i)") {
        const ThetaConstants c = theta_constants(ModularParam(1.0));
        REQUIRE(rel_residual(c.th2, c.th4) < 1e-12);
    }
    SECTION("all positive at tau = 2i") {
        const ThetaConstants c = theta_constants(ModularParam(2.0));
        REQUIRE(c.th2 > 0.0);
        REQUIRE(c.th3 > 0.0);
        REQUIRE(c.th4 > 0.0);
        REQUIRE(c.th1_prime > 0.0);
    }
    SECTION("jacobi relation theta_3^4 = theta_2^4 + theta_4^4") {
        for (double t : {1.0, 1.5, 2.0, 3.0}) {
            const ThetaConstants c = theta_constants(ModularParam(t));
            REQUIRE(rel_residual(std::pow(c.th3, 4), std::pow(c.th2, 4) + std::pow(c.th4, 4)) < 1e-13);
        }
    }
}

TEST_CASE("quasi-periodicity residuals") {
    SECTION("theta_3 at u = 0.3, tau = i") {
        const auto r = quasi_periodicity_residual(3, complex(0.3, 0.0), ModularParam(1.0));
        REQUIRE(r.res_1 < 1e-12);
        REQUIRE(r.res_tau < 1e-12);
    }
    SECTION("theta_1 at the origin: both sides of the shift by 1 vanish") {
        const auto r = quasi_periodicity_residual(1, complex(0.0, 0.0), ModularParam(2.0));
        REQUIRE(r.res_1 == 0.0);
    }
    SECTION("theta_2 at a complex point") {
        const auto r = quasi_periodicity_residual(2, complex(0.1, 0.2), ModularParam(1.1));
        REQUIRE(r.res_1 < 1e-12);
        REQUIRE(r.res_tau < 1e-12);
    }
    SECTION("relative residuals across a seeded sweep") {
        for (double t : {1.0, 1.5, 2.0}) {
            const ModularParam tau(t);
            for (std::uint64_t i = 0; i < 50; ++i) {
                CounterRng rng(5, stream_id(12, static_cast<std::uint64_t>(t * 16), i));
                const complex u(rng.uniform(0.0, 1.0), rng.uniform(0.0, t));
                for (int a = 1; a <= 4; ++a) {
                    const auto r = quasi_periodicity_residual(a, u, tau);
                    REQUIRE(rel_residual(r.lhs_1, r.rhs_1) < 1e-12);
                    REQUIRE(rel_residual(r.lhs_tau, r.rhs_tau) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("parity: theta_1 odd, theta_2..4 even") {
    for (double t : {1.0, 1.5, 2.0}) {
        const ModularParam tau(t);
        for (std::uint64_t i = 0; i < 100; ++i) {
            CounterRng rng(9, stream_id(13, static_cast<std::uint64_t>(t * 16), i));
            const complex u(rng.uniform(0.0, 1.0), rng.uniform(0.0, t));
            REQUIRE(rel_residual(theta(1, -u, tau), -theta(1, u, tau)) < 1e-12);
            for (int a = 2; a <= 4; ++a) {
                REQUIRE(rel_residual(theta(a, -u, tau), theta(a, u, tau)) < 1e-12);
            }
        }
    }
}

TEST_CASE("zero lattice: theta_a vanishes at omega_{a-1} and its translates") {
    for (double t : {1.0, 1.2, 1.5, 2.0, 3.0}) {
        const ModularParam tau(t);
        for (int a = 1; a <= 4; ++a) {
            const complex w = half_period(a - 1, tau);
            REQUIRE(std::abs(theta(a, w, tau)) < 1e-12);
            REQUIRE(std::abs(theta(a, w + complex(1.0, t), tau)) < 1e-10 * std::exp(pi * t));
            // relative to the quasi-periodicity growth the shifted zero is equally sharp
            const complex shifted = theta(a, w + complex(-2.0, t), tau);
            REQUIRE(std::abs(shifted) / std::exp(pi * t) < 1e-10);
        }
    }
}

TEST_CASE("lattice distance helper") {
    const ModularParam tau(1.5);
    REQUIRE(lattice_distance(complex(1.0, 1.5), complex(0.0, 0.0), tau) < 1e-15);
    REQUIRE(lattice_distance(complex(0.5, 0.75), half_period(3, tau), tau) == Catch::Approx(0.5));
    REQUIRE(lattice_distance(complex(3.2, -1.4), complex(0.0, 0.0), tau) ==
            Catch::Approx(std::abs(complex(0.2, 0.1))));
}
