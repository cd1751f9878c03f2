#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ballharm/audit.hpp"
#include "ballharm/bounds.hpp"
#include "ballharm/sharpness.hpp"

#include <cmath>
#include <memory>
#include <numbers>

using namespace ballharm;

namespace {
const std::uint64_t kSeed = 99;

std::shared_ptr<const QuadratureRule> shared_rule(int n, int level) {
    return std::make_shared<const QuadratureRule>(product_rule(n, level));
}

HarmonicField constant_field(int n, double value,
                             std::shared_ptr<const QuadratureRule> rule) {
    BoundaryFunction b;
    b.dim = n;
    b.eval = [value](const CVector&) { return value; };
    return make_field(b, std::move(rule));
}
} // namespace

TEST_CASE("bergman bound constant") {
    for (int n : {1, 2, 3})
        CHECK(std::abs(bergman_bound_constant(n) -
                       sharp_constant(n) / std::sqrt(n + 1.0)) < 1e-14);
}

TEST_CASE("bergman gradient sandwich") {
    const auto rule = shared_rule(2, 12);
    SUBCASE("constant field is degenerate but passing") {
        const auto rep =
            bergman_bound_check(constant_field(2, 0.4, rule),
                                CVector::zero(2), 1e-6);
        CHECK(rep.pass);
        CHECK(rep.lhs < 1e-8);
    }
    SUBCASE("lower inequality is algebraic") {
        for (int i = 0; i < 25; ++i) {
            const auto field =
                make_field(random_smooth_boundary(2, kSeed, i), rule);
            const CVector z = random_interior_point(2, kSeed, 100 + i, 0.8);
            const auto rep = bergman_bound_check(field, z, 1e-4);
            CHECK(rep.pass);
            CHECK(std::stod(rep.metadata.at("lower_slack")) > -1e-10);
        }
    }
    SUBCASE("extremal field at the center sits near half the constant") {
        const auto strong = shared_rule(2, 48);
        const auto field =
            extremal_field(CVector::zero(2), CVector::basis(2, 0), strong);
        const auto rep = bergman_bound_check(field, CVector::zero(2), 1e-4);
        CHECK(rep.pass);
        const double ratio = std::stod(rep.metadata.at("ratio_b_over_c"));
        CHECK(ratio > 0.45);
        CHECK(ratio < 0.55);
    }
}

TEST_CASE("lipschitz estimate in the hyperbolic metric") {
    const auto rule = shared_rule(2, 12);
    SUBCASE("coincident points") {
        const auto field = make_field(random_smooth_boundary(2, kSeed, 50), rule);
        const CVector z = random_interior_point(2, kSeed, 200, 0.7);
        const auto rep = lipschitz_check(field, z, z, 1e-9);
        CHECK(rep.pass);
        CHECK(rep.lhs < 1e-14);
    }
    SUBCASE("random pairs pass") {
        for (int i = 0; i < 50; ++i) {
            const auto field =
                make_field(random_smooth_boundary(2, kSeed, 60 + i), rule);
            const CVector z = random_interior_point(2, kSeed, 300 + 2 * i, 0.8);
            const CVector w = random_interior_point(2, kSeed, 301 + 2 * i, 0.8);
            CHECK(lipschitz_check(field, z, w, 1e-6).pass);
        }
    }
    SUBCASE("extremal field is a tightness probe for small separations") {
        const auto strong = shared_rule(2, 48);
        const auto field =
            extremal_field(CVector::zero(2), CVector::basis(2, 0), strong);
        const double t = 0.02;
        auto w = CVector::zero(2);
        w[0] = t;
        const auto rep = lipschitz_check(field, CVector::zero(2), w, 1e-6);
        CHECK(rep.pass);
        CHECK(rep.lhs / rep.rhs > 0.9);
    }
}

TEST_CASE("jacobian operator norm") {
    SUBCASE("diagonal matrix") {
        const std::vector<std::vector<double>> rows = {{3.0, 0.0, 0.0, 0.0},
                                                       {0.0, 4.0, 0.0, 0.0}};
        CHECK(std::abs(jacobian_operator_norm(rows) - 4.0) < 1e-10);
    }
    SUBCASE("single row reduces to the euclidean norm") {
        const std::vector<std::vector<double>> rows = {{1.0, 2.0, 2.0, 0.0}};
        CHECK(std::abs(jacobian_operator_norm(rows) - 3.0) < 1e-10);
    }
    SUBCASE("ragged input is rejected") {
        const std::vector<std::vector<double>> rows = {{1.0, 2.0}, {1.0}};
        CHECK_THROWS_AS((void)jacobian_operator_norm(rows),
                        std::invalid_argument);
    }
}

TEST_CASE("vector field operator norm bound") {
    const auto rule = shared_rule(2, 12);
    auto scaled_component = [&](int index, double scale) {
        auto b = random_smooth_boundary(2, kSeed, 400 + index);
        auto inner = b.eval;
        b.eval = [inner, scale](const CVector& w) { return scale * inner(w); };
        b.sup_bound = scale;
        return make_field(std::move(b), rule);
    };

    SUBCASE("m = 1 reduces to the scalar gradient check") {
        VectorField H;
        H.components.push_back(scaled_component(0, 1.0));
        const CVector z = random_interior_point(2, kSeed, 500, 0.7);
        const auto rep = operator_norm_check(H, z, 1e-4);
        CHECK(rep.pass);
        const auto grad = poisson_gradient(H.components[0], z);
        double g2 = 0.0;
        for (double g : grad) g2 += g * g;
        CHECK(std::abs(rep.lhs - std::sqrt(g2)) < 1e-12);
    }
    SUBCASE("appending a zero component leaves the norm unchanged") {
        VectorField H;
        H.components.push_back(scaled_component(1, 0.8));
        const CVector z = random_interior_point(2, kSeed, 501, 0.7);
        const double before = operator_norm_check(H, z, 1e-4).lhs;
        H.components.push_back(constant_field(2, 0.0, rule));
        const double after = operator_norm_check(H, z, 1e-4).lhs;
        CHECK(std::abs(before - after) < 1e-12);
    }
    SUBCASE("rotated rank-1 pair matches the scalar case") {
        const double theta = 0.7;
        VectorField H;
        H.components.push_back(scaled_component(2, std::cos(theta)));
        H.components.push_back(scaled_component(2, std::sin(theta)));
        VectorField S;
        S.components.push_back(scaled_component(2, 1.0));
        const CVector z = random_interior_point(2, kSeed, 502, 0.7);
        CHECK(std::abs(operator_norm_check(H, z, 1e-4).lhs -
                       operator_norm_check(S, z, 1e-4).lhs) < 1e-10);
    }
    SUBCASE("random multi-component fields pass") {
        for (int m : {2, 3}) {
            VectorField H;
            for (int k = 0; k < m; ++k)
                H.components.push_back(
                    scaled_component(600 + 10 * m + k, 1.0 / std::sqrt(m)));
            const CVector z = random_interior_point(2, kSeed, 600 + m, 0.7);
            CHECK(operator_norm_check(H, z, 1e-4).pass);
        }
    }
    SUBCASE("a sampled value of ||H|| above one is rejected") {
        VectorField H;
        H.components.push_back(constant_field(2, 0.8, rule));
        H.components.push_back(constant_field(2, 0.8, rule));
        const CVector z = random_interior_point(2, kSeed, 700, 0.7);
        CHECK_THROWS_AS((void)operator_norm_check(H, z, 1e-4),
                        std::invalid_argument);
    }
}
