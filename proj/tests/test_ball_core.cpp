#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ballharm/audit.hpp"
#include "ballharm/ball_core.hpp"

#include <cmath>
#include <numbers>

using namespace ballharm;

namespace {
constexpr double kPi = std::numbers::pi;
const std::uint64_t kSeed = 42;
} // namespace

TEST_CASE("hermitian inner product basics") {
    const auto e1 = CVector::basis(2, 0);
    CHECK(hermitian_inner(e1, e1) == Complex(1.0));
    CHECK(hermitian_inner(e1, CVector::zero(2)) == Complex(0.0));
    const CVector a{Complex(0.0, 1.0), Complex(0.0)};
    const CVector b{Complex(0.0), Complex(1.0)};
    CHECK(hermitian_inner(a, b) == Complex(0.0));
    CHECK_THROWS_AS((void)hermitian_inner(e1, CVector::zero(3)),
                    std::invalid_argument);
}

TEST_CASE("cvector real-coordinate round trip") {
    const CVector z{Complex(0.1, -0.2), Complex(0.3, 0.4)};
    const auto xs = z.reals();
    REQUIRE(xs.size() == 4);
    CHECK(xs[0] == 0.1);
    CHECK(xs[1] == -0.2);
    const CVector back = CVector::from_reals(xs);
    CHECK((back - z).norm() == 0.0);
    CHECK_THROWS_AS((void)CVector::from_reals(std::vector<double>{1.0, 2.0, 3.0}),
                    std::invalid_argument);
}

TEST_CASE("mobius swaps zero and the base point") {
    for (int i = 0; i < 50; ++i) {
        const CVector a = random_interior_point(2, kSeed, i, 0.9);
        CHECK(mobius(a, a).norm() < 1e-12);
        CHECK((mobius(a, CVector::zero(2)) - a).norm() < 1e-12);
    }
}

TEST_CASE("mobius at the origin is minus identity") {
    const CVector z{Complex(0.2, 0.1), Complex(-0.3, 0.0)};
    CHECK((mobius(CVector::zero(2), z) + z).norm() < 1e-15);
}

TEST_CASE("mobius is an involution") {
    for (int n : {1, 2, 3, 4}) {
        double worst = 0.0;
        for (int i = 0; i < 250; ++i) {
            const CVector a = random_interior_point(n, kSeed, 2 * i, 0.95);
            const CVector z = random_interior_point(n, kSeed, 2 * i + 1, 0.95);
            worst = std::max(worst, (mobius(a, mobius(a, z)) - z).norm());
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("mobius rejects points outside the closed ball") {
    const CVector a{Complex(0.5)};
    CHECK_THROWS_AS((void)mobius(a, CVector{Complex(1.5)}), std::domain_error);
}

TEST_CASE("mobius inner product identity") {
    const CVector a = random_interior_point(2, kSeed, 7, 0.8);
    const CVector z = random_interior_point(2, kSeed, 8, 0.8);
    const CVector w = random_interior_point(2, kSeed, 9, 0.8);

    SUBCASE("w = z collapses to a real ratio") {
        const auto [lhs, rhs] = mobius_inner_identity(a, z, z);
        const double expect = (1.0 - a.norm_sq()) * (1.0 - z.norm_sq()) /
                              std::norm(Complex(1.0) - hermitian_inner(z, a));
        CHECK(std::abs(lhs - expect) < 1e-13);
        CHECK(std::abs(rhs - expect) < 1e-13);
    }
    SUBCASE("a = 0 gives 1 - <z,w>") {
        const auto [lhs, rhs] = mobius_inner_identity(CVector::zero(2), z, w);
        const Complex expect = Complex(1.0) - hermitian_inner(z, w);
        CHECK(std::abs(lhs - expect) < 1e-15);
        CHECK(std::abs(rhs - expect) < 1e-15);
    }
    SUBCASE("random triples agree to 1e-12") {
        for (int i = 0; i < 1000; ++i) {
            const CVector aa = random_interior_point(3, kSeed, 100 + 3 * i, 0.9);
            const CVector zz = random_interior_point(3, kSeed, 101 + 3 * i, 0.9);
            const CVector ww = random_interior_point(3, kSeed, 102 + 3 * i, 0.9);
            const auto [lhs, rhs] = mobius_inner_identity(aa, zz, ww);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
        }
    }
}

TEST_CASE("bergman metric closed-form values") {
    SUBCASE("z = 0 is (n+1) I") {
        const auto g = bergman_metric(CVector::zero(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(g.at(i, j) == Complex(i == j ? 4.0 : 0.0));
    }
    SUBCASE("n = 1 at z = 0.5") {
        const auto g = bergman_metric(CVector{Complex(0.5)});
        CHECK(std::abs(g.at(0, 0) - 32.0 / 9.0) < 1e-14);
    }
    SUBCASE("inverse at 0 is I/(n+1)") {
        const auto gi = bergman_metric_inverse(CVector::zero(2));
        CHECK(std::abs(gi.at(0, 0) - 1.0 / 3.0) < 1e-15);
        CHECK(std::abs(gi.at(0, 1)) == 0.0);
    }
    SUBCASE("real radial eigenvalues of the inverse") {
        const double r = 0.6;
        const auto gi = bergman_metric_inverse(CVector{Complex(r), Complex(0.0)});
        const double s = 1.0 - r * r;
        CHECK(std::abs(gi.at(0, 0) - s * s / 3.0) < 1e-14);
        CHECK(std::abs(gi.at(1, 1) - s / 3.0) < 1e-14);
    }
}

TEST_CASE("metric contraction with its inverse is the identity") {
    for (int n : {1, 2, 3}) {
        for (int i = 0; i < 30; ++i) {
            const CVector z = random_interior_point(n, kSeed, 300 + i, 0.9);
            const auto prod = contract(bergman_metric(z), bergman_metric_inverse(z));
            for (std::size_t a = 0; a < prod.dim(); ++a)
                for (std::size_t b = 0; b < prod.dim(); ++b)
                    CHECK(std::abs(prod.at(a, b) - (a == b ? 1.0 : 0.0)) < 1e-10);
        }
    }
}

TEST_CASE("bergman metric is positive definite") {
    for (int i = 0; i < 30; ++i) {
        const CVector z = random_interior_point(3, kSeed, 400 + i, 0.95);
        CHECK(bergman_metric(z).is_positive_definite());
    }
    auto m = HermitianMatrix(2);
    m.at(0, 0) = -1.0;
    m.at(1, 1) = 1.0;
    CHECK_FALSE(m.is_positive_definite());
}

TEST_CASE("bergman kernel values") {
    CHECK(bergman_kernel(CVector::zero(2), CVector::zero(2)) == Complex(1.0));
    const CVector z = random_interior_point(2, kSeed, 500, 0.9);
    CHECK(std::abs(bergman_kernel(z, CVector::zero(2)) - Complex(1.0)) < 1e-15);
    const Complex k = bergman_kernel(CVector{Complex(0.5)}, CVector{Complex(0.5)});
    CHECK(std::abs(k - Complex(16.0 / 9.0)) < 1e-14);
}

TEST_CASE("bergman gradient norm from wirtinger data at the origin") {
    const std::vector<Complex> dh = {Complex(0.3, -0.1), Complex(0.0, 0.2)};
    double sum = 0.0;
    for (const Complex& d : dh) sum += std::norm(d);
    const double got = bergman_grad_norm_from_wirtinger(CVector::zero(2), dh);
    CHECK(std::abs(got - std::sqrt(sum / 3.0)) < 1e-14);
}

TEST_CASE("hyperbolic distance") {
    SUBCASE("coincident points") {
        const CVector z = random_interior_point(2, kSeed, 600, 0.9);
        CHECK(hyperbolic_distance(z, z) < 1e-12);
    }
    SUBCASE("n = 1 radial value") {
        const double d = hyperbolic_distance(CVector{Complex(0.0)},
                                             CVector{Complex(0.5)});
        CHECK(std::abs(d - std::sqrt(2.0) * std::atanh(0.5)) < 1e-13);
    }
    SUBCASE("symmetry and mobius invariance") {
        for (int i = 0; i < 100; ++i) {
            const CVector a = random_interior_point(2, kSeed, 700 + 3 * i, 0.8);
            const CVector z = random_interior_point(2, kSeed, 701 + 3 * i, 0.8);
            const CVector w = random_interior_point(2, kSeed, 702 + 3 * i, 0.8);
            const double d = hyperbolic_distance(z, w);
            CHECK(std::abs(d - hyperbolic_distance(w, z)) < 1e-10);
            CHECK(std::abs(d - hyperbolic_distance(mobius(a, z), mobius(a, w))) <
                  1e-9);
        }
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(require_interior(CVector{Complex(1.0)}), std::domain_error);
    CHECK_THROWS_AS(require_boundary(CVector{Complex(0.5)}), std::domain_error);
    CHECK_THROWS_AS(require_unit_direction(CVector{Complex(0.5)}),
                    std::invalid_argument);
    CHECK_NOTHROW(require_boundary(CVector{Complex(std::cos(1.0), std::sin(1.0))}));
}
