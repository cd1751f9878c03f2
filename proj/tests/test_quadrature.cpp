#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ballharm/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

using namespace ballharm;

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

TEST_CASE("gamma function classical values") {
    CHECK(std::abs(gamma_fn(1.0) - 1.0) < 1e-14);
    CHECK(std::abs(gamma_fn(0.5) - std::sqrt(kPi)) < 1e-13);
    // 7/2: recurrence down to 1/2 gives (15/8) sqrt(pi)
    CHECK(std::abs(gamma_fn(3.5) - 15.0 / 8.0 * std::sqrt(kPi)) <
          1e-12 * gamma_fn(3.5));
    CHECK(std::abs(gamma_fn(6.0) - 120.0) < 1e-10);
    CHECK_THROWS_AS((void)gamma_fn(0.0), std::domain_error);
}

TEST_CASE("sphere areas") {
    CHECK(std::abs(sphere_area(2) - 2.0 * kPi) < 1e-13);
    CHECK(std::abs(sphere_area(4) - 2.0 * kPi * kPi) < 1e-12);
    CHECK(std::abs(sphere_area(6) - kPi * kPi * kPi) < 1e-12);
    CHECK(ball_boundary_area(1) == sphere_area(2));
    CHECK_THROWS_AS((void)sphere_area(0), std::invalid_argument);
}

TEST_CASE("product rule weight sums converge to sigma") {
    // the theta factors are not polynomial, so low levels are spectral
    // rather than exact
    for (int n : {1, 2, 3}) {
        for (int level : {8, 16}) {
            const auto rule = product_rule(n, level);
            const double got =
                integrate(rule, [](const CVector&) { return 1.0; });
            CHECK(std::abs(got - rule.sigma()) < 1e-8 * rule.sigma());
            for (const auto& w : rule.nodes)
                CHECK(std::abs(w.norm() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("product rule squared-coordinate moment, n = 2") {
    const auto rule = product_rule(2, 12);
    const double got = integrate(rule, [](const CVector& w) {
        const double x = w[0].real();
        return x * x;
    });
    CHECK(std::abs(got - kPi * kPi / 2.0) < 1e-8);
}

TEST_CASE("product rule |Re w_1| against the closed moment, n = 2") {
    // integral of |Re<w,v>| over S^3 with ||v|| = 1 equals
    // sigma * Gamma(2) / (sqrt(pi) Gamma(5/2)) = 8 pi / 3.
    const auto rule = product_rule(2, 48);
    const double got =
        integrate(rule, [](const CVector& w) { return std::abs(w[0].real()); });
    const double expect = 8.0 * kPi / 3.0;
    CHECK(std::abs(got - expect) < 1e-3 * expect);
}

TEST_CASE("monte carlo rule") {
    const auto rule = mc_rule(2, 20000, 9);
    SUBCASE("weights sum to sigma") {
        double s = 0.0;
        for (double w : rule.weights) s += w;
        CHECK(std::abs(s - rule.sigma()) < 1e-10 * rule.sigma());
    }
    SUBCASE("odd moment is statistically small") {
        const double got =
            integrate(rule, [](const CVector& w) { return w[0].real(); });
        CHECK(std::abs(got) < 0.5); // 3 sigma_stat is about 0.24
    }
    SUBCASE("same seed reproduces nodes, different seed does not") {
        const auto again = mc_rule(2, 20000, 9);
        CHECK(again.nodes[0][0] == rule.nodes[0][0]);
        CHECK(again.nodes[19999][1] == rule.nodes[19999][1]);
        const auto other = mc_rule(2, 20000, 10);
        CHECK(other.nodes[0][0] != rule.nodes[0][0]);
    }
    SUBCASE("nodes lie on the sphere") {
        for (int k = 0; k < 100; ++k)
            CHECK(std::abs(rule.nodes[k].norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("integrate rejects non-finite values") {
    const auto rule = product_rule(1, 8);
    CHECK_THROWS_AS((void)integrate(rule,
                                    [](const CVector&) {
                                        return std::numeric_limits<
                                            double>::quiet_NaN();
                                    }),
                    std::runtime_error);
}

TEST_CASE("cap measure and inverse") {
    CHECK(std::abs(cap_measure(2, kPi / 2.0) - 0.5) < 1e-12);
    CHECK(std::abs(cap_measure(3, kPi) - 1.0) < 1e-12);
    CHECK(std::abs(cap_measure(1, 0.4) - 0.4 / kPi) < 1e-13);
    CHECK(std::abs(cap_alpha(2, 0.5) - kPi / 2.0) < 1e-10);
    CHECK(std::abs(cap_alpha(1, 0.25) - kPi / 4.0) < 1e-12);
    for (double c : {0.05, 0.3, 0.77, 0.95})
        for (int n : {1, 2, 3})
            CHECK(std::abs(cap_measure(n, cap_alpha(n, c)) - c) < 1e-10);
    CHECK_THROWS_AS((void)cap_alpha(2, 1.5), std::domain_error);
}

TEST_CASE("one-dimensional helpers") {
    std::vector<double> x, w;
    gauss_legendre_interval(5, 0.0, 1.0, x, w);
    double cubic = 0.0;
    for (int i = 0; i < 5; ++i) cubic += w[i] * x[i] * x[i] * x[i];
    CHECK(std::abs(cubic - 0.25) < 1e-14);

    const double s = adaptive_simpson([](double t) { return std::sin(t); }, 0.0,
                                      kPi);
    CHECK(std::abs(s - 2.0) < 1e-12);
}

TEST_CASE("rule serialization round trip") {
    for (const auto& rule : {product_rule(2, 6), mc_rule(2, 500, 3)}) {
        std::stringstream ss;
        write_rule(ss, rule);
        const auto back = read_rule(ss);
        CHECK(back.dim == rule.dim);
        CHECK(back.kind == rule.kind);
        REQUIRE(back.nodes.size() == rule.nodes.size());
        // %.17g round-trips doubles exactly
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            CHECK(back.weights[k] == rule.weights[k]);
            for (int j = 0; j < rule.dim; ++j)
                CHECK(back.nodes[k][j] == rule.nodes[k][j]);
        }
    }
    std::stringstream bad("not a rule header\n");
    CHECK_THROWS_AS((void)read_rule(bad), std::runtime_error);
}

TEST_CASE("counter-based generator is a pure function") {
    CHECK(counter_uniform(1, 0) == counter_uniform(1, 0));
    CHECK(counter_uniform(1, 0) != counter_uniform(1, 1));
    CHECK(counter_uniform(1, 0) != counter_uniform(2, 0));
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const double u = counter_uniform(7, i);
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
    CHECK(splitmix64(0) == splitmix64(0));
}
