#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pfaffell/numerics.hpp"

using namespace pfaffell;

TEST_CASE("find_root_monotone recovers simple roots") {
    SECTION("linear") {
        const double x = find_root_monotone([](double v) { return v - 2.0; }, Bracket{0.0, 5.0});
        REQUIRE(std::abs(x - 2.0) < 1e-10);
    }
    SECTION("cubic") {
        const double x = find_root_monotone([](double v) { return v * v * v - 8.0; }, Bracket{0.0, 5.0});
        REQUIRE(std::abs(x - 2.0) < 1e-10);
    }
    SECTION("root at an endpoint") {
        const double x = find_root_monotone([](double v) { return v; }, Bracket{0.0, 5.0});
        REQUIRE(x == 0.0);
    }
}

TEST_CASE("find_root_monotone rejects a bracket without sign change") {
    REQUIRE_THROWS_AS(find_root_monotone([](double v) { return v + 1.0; }, Bracket{0.0, 5.0}),
                      no_sign_change_error);
}

TEST_CASE("find_root_monotone runs out of iterations only when asked the impossible") {
    Tolerance tol;
    tol.abs_tol = 0.0; // |f| = 1 everywhere and the bracket width never reaches 0
    REQUIRE_THROWS_AS(
        find_root_monotone([](double v) { return v < 1.3 ? -1.0 : 1.0; }, Bracket{0.0, 5.0}, tol),
        max_iterations_error);
}

TEST_CASE("find_root_monotone round-trips a forward-computed monotone map") {
    // property used by the curve solver: solve f(x) = f(x0) for seeded x0
    for (std::uint64_t i = 0; i < 50; ++i) {
        CounterRng rng(42, stream_id(i));
        const double x0 = rng.uniform(0.2, 4.8);
        const auto f = [](double v) { return std::exp(0.5 * v) + v; };
        const double target = f(x0);
        const double x = find_root_monotone([&](double v) { return f(v) - target; }, Bracket{0.0, 5.0});
        REQUIRE(std::abs(x - x0) < 1e-9);
    }
}

TEST_CASE("central_diff matches known derivatives") {
    SECTION("sine at zero") {
        const complex d = central_diff([](complex x) { return std::sin(x); }, complex(0.0, 0.0), 1e-5);
        REQUIRE(std::abs(d - complex(1.0, 0.0)) < 1e-9);
    }
    SECTION("constant") {
        const complex d = central_diff([](complex) { return complex(3.0, 0.0); }, complex(0.7, 0.1), 1e-5);
        REQUIRE(std::abs(d) == 0.0);
    }
    SECTION("square at two") {
        const complex d = central_diff([](complex x) { return x * x; }, complex(2.0, 0.0), 1e-5);
        REQUIRE(std::abs(d - complex(4.0, 0.0)) < 1e-8);
    }
}

TEST_CASE("central_diff is exact on low-degree polynomials") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        CounterRng rng(7, stream_id(900, i));
        const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0), c = rng.uniform(-2.0, 2.0);
        const complex x(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const complex d = central_diff([&](complex v) { return a * v * v + b * v + c; }, x, 1e-6);
        REQUIRE(std::abs(d - (2.0 * a * x + b)) < 1e-9);
    }
}

TEST_CASE("central_diff reports evaluation failures") {
    REQUIRE_THROWS_AS(
        central_diff([](complex) { return complex(std::nan(""), 0.0); }, complex(0.0, 0.0), 1e-5),
        evaluation_failure);
}

TEST_CASE("relative residual normalizes by max(1, |lhs|, |rhs|)") {
    REQUIRE(rel_residual(complex(1e8, 0.0), complex(1e8 + 1.0, 0.0)) == Catch::Approx(1e-8));
    REQUIRE(rel_residual(complex(1e-8, 0.0), complex(0.0, 0.0)) == Catch::Approx(1e-8));
    REQUIRE(rel_residual(2.0, 2.0) == 0.0);
}

TEST_CASE("counter rng is deterministic and order-independent") {
    CounterRng a(123, stream_id(4, 5));
    CounterRng b(123, stream_id(4, 5));
    for (int i = 0; i < 10; ++i) REQUIRE(a.next_u64() == b.next_u64());
    CounterRng c(123, stream_id(4, 6));
    REQUIRE(CounterRng(123, stream_id(4, 5)).next_u64() != c.next_u64());
    CounterRng d(124, stream_id(4, 5));
    REQUIRE(CounterRng(123, stream_id(4, 5)).next_u64() != d.next_u64());
    CounterRng e(1, stream_id(0));
    for (int i = 0; i < 1000; ++i) {
        const double x = e.uniform01();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
    }
}
