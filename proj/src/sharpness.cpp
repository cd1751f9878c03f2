#include "ballharm/sharpness.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

namespace ballharm {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

double sharp_constant(int n) {
    if (n < 1) throw std::invalid_argument("sharp_constant requires n >= 1");
    return 2.0 * gamma_fn(n + 1.0) / (kSqrtPi * gamma_fn(n + 0.5));
}

CVector v_vector(const CVector& z, const CVector& l) {
    require_interior(z);
    require_unit_direction(l);
    require_same_dim(z, l);
    const double nz2 = z.norm_sq();
    if (nz2 < 1e-28) return l;
    const double s = std::sqrt(1.0 - nz2);
    return s * l + ((1.0 - s) * hermitian_inner(l, z) / nz2) * z;
}

double c_closed(const CVector& z, const CVector& l) {
    const int n = int(z.dim());
    const double vnorm = v_vector(z, l).norm();
    return 2.0 * n * vnorm / (1.0 - z.norm_sq()) * gamma_fn(double(n)) /
           (kSqrtPi * gamma_fn(n + 0.5));
}

double c_quadrature(const CVector& z, const CVector& l, const QuadratureRule& rule) {
    require_interior(z);
    require_unit_direction(l);
    return integrate(rule, [&](const CVector& w) {
        return std::abs(kernel_grad_dot(z, w, l));
    });
}

double c_transformed(const CVector& z, const CVector& l, const QuadratureRule& rule) {
    const CVector v = v_vector(z, l);
    const double integral = integrate(rule, [&](const CVector& eta) {
        return std::abs(hermitian_inner(eta, v).real());
    });
    const int n = int(z.dim());
    return 2.0 * n / (rule.sigma() * (1.0 - z.norm_sq())) * integral;
}

BoundaryFunction extremal_boundary(const CVector& z, const CVector& l) {
    const CVector v = v_vector(z, l);
    const CVector zc = z;
    BoundaryFunction b;
    b.dim = int(z.dim());
    b.sup_bound = 1.0;
    b.discontinuous = true;
    b.label = "extremal h*_{z,l}";
    b.eval = [zc, v](const CVector& w) {
        const double re = hermitian_inner(mobius(zc, w), v).real();
        return re >= 0.0 ? 1.0 : -1.0; // sgn(0) := +1
    };
    return b;
}

HarmonicField extremal_field(const CVector& z, const CVector& l,
                             std::shared_ptr<const QuadratureRule> rule) {
    return make_field(extremal_boundary(z, l), std::move(rule));
}

DirectionalProfile khavinson_argmax(const CVector& z, int grid_size,
                                    const QuadratureRule* rule) {
    require_interior(z);
    const std::size_t n = z.dim();
    DirectionalProfile profile;
    profile.z = z;

    const bool degenerate = z.norm() < 1e-14;
    profile.degenerate = degenerate;

    // Equidistributed directions from the deterministic counter stream.
    constexpr std::uint64_t kDirectionSeed = 0x5EEDD1ECULL;
    for (int i = 0; i < grid_size; ++i) {
        CVector dir(n);
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint64_t base = std::uint64_t(i) * (2 * n) + 2 * j;
            const double u1 = counter_uniform(kDirectionSeed, base);
            const double u2 = counter_uniform(kDirectionSeed, base + 1);
            const double rad = std::sqrt(-2.0 * std::log(u1));
            dir[j] = Complex(rad * std::cos(2.0 * std::numbers::pi * u2),
                             rad * std::sin(2.0 * std::numbers::pi * u2));
        }
        dir *= Complex(1.0 / dir.norm());
        profile.directions.push_back(std::move(dir));
    }

    // Exact axes: radial (or e_1 when degenerate) and a tangential direction.
    if (!degenerate) {
        CVector radial = z;
        radial *= Complex(1.0 / z.norm());
        profile.directions.push_back(radial);
        // i*zhat is Hermitian-orthogonal to nothing (|<il,z>|=||z||); take a
        // genuinely tangential axis when n >= 2, else i*zhat.
        if (n >= 2) {
            CVector t(n);
            // Gram-Schmidt of a basis vector against zhat.
            std::size_t pick = 0;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j)
                if (std::abs(radial[j]) < best) {
                    best = std::abs(radial[j]);
                    pick = j;
                }
            t = CVector::basis(n, pick) - hermitian_inner(CVector::basis(n, pick), radial) * radial;
            t *= Complex(1.0 / t.norm());
            profile.directions.push_back(t);
        } else {
            profile.directions.push_back(Complex(0.0, 1.0) * radial);
        }
    } else {
        profile.directions.push_back(CVector::basis(n, 0));
        profile.directions.push_back(Complex(0.0, 1.0) * CVector::basis(n, 0));
    }

    double best_val = -1.0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < profile.directions.size(); ++i) {
        const double cv = c_closed(z, profile.directions[i]);
        profile.closed_values.push_back(cv);
        profile.quadrature_values.push_back(
            rule ? c_quadrature(z, profile.directions[i], *rule)
                 : std::numeric_limits<double>::quiet_NaN());
        if (cv > best_val) {
            best_val = cv;
            best_idx = i;
        }
    }
    profile.argmax_direction = profile.directions[best_idx];
    return profile;
}

VerificationReport gradient_bound_check(const HarmonicField& field,
                                        const CVector& z, double tolerance) {
    if (field.boundary.sup_bound > 1.0)
        throw std::invalid_argument(
            "gradient_bound_check requires sup_bound <= 1");
    const auto grad = poisson_gradient(field, z);
    double g2 = 0.0;
    for (double g : grad) g2 += g * g;
    const double lhs = std::sqrt(g2) * (1.0 - z.norm_sq());
    const double rhs = sharp_constant(int(z.dim()));
    return make_report("sharpness.gradient_bound", lhs, rhs, tolerance,
                       {{"n", std::to_string(z.dim())},
                        {"radius", format_full(z.norm())},
                        {"boundary", field.boundary.label}});
}

void write_profile_csv(std::ostream& os, const DirectionalProfile& profile) {
    const std::size_t m = 2 * profile.z.dim();
    os << "dir_index";
    for (std::size_t j = 0; j < m; ++j) os << ",l_" << j;
    os << ",c_closed,c_quadrature\n";
    for (std::size_t i = 0; i < profile.directions.size(); ++i) {
        os << i;
        for (double x : profile.directions[i].reals()) os << ',' << format_full(x);
        os << ',' << format_full(profile.closed_values[i]) << ','
           << format_full(profile.quadrature_values[i]) << "\n";
    }
}

} // namespace ballharm
