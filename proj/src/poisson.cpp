#include "ballharm/poisson.hpp"

#include <cmath>

namespace ballharm {

namespace {

void require_field_point(const HarmonicField& field, const CVector& z) {
    require_interior(z);
    if (int(z.dim()) != field.boundary.dim)
        throw std::invalid_argument("dimension mismatch between field and point");
    if (!field.allow_near_boundary && z.norm() > field.radius_limit)
        throw std::domain_error(
            "evaluation too close to the boundary for a fixed rule; "
            "set allow_near_boundary to override");
}

// Boundary data wrapped with the opportunistic sup-bound check.
std::function<double(const CVector&)> checked(const BoundaryFunction& b) {
    return [&b](const CVector& w) {
        const double v = b.eval(w);
        if (std::abs(v) > b.sup_bound * (1.0 + 1e-12) + 1e-12)
            throw std::logic_error("boundary value exceeds declared sup bound (" +
                                   b.label + ")");
        return v;
    };
}

} // namespace

HarmonicField make_field(BoundaryFunction boundary,
                         std::shared_ptr<const QuadratureRule> rule) {
    if (!rule || rule->dim != boundary.dim)
        throw std::invalid_argument("rule and boundary dimensions must agree");
    HarmonicField f;
    f.boundary = std::move(boundary);
    f.rule = std::move(rule);
    return f;
}

double ps_kernel(const CVector& z, const CVector& w) {
    require_interior(z);
    require_same_dim(z, w);
    const int n = int(z.dim());
    const double d = 1.0 - z.norm_sq();
    const double q = std::norm(1.0 - hermitian_inner(z, w));
    return std::pow(d, n) / (ball_boundary_area(n) * std::pow(q, n));
}

CVector ps_kernel_dbar(const CVector& z, const CVector& w) {
    require_interior(z);
    require_same_dim(z, w);
    const int n = int(z.dim());
    const double d = 1.0 - z.norm_sq();
    const Complex zw = hermitian_inner(z, w);
    const double pref =
        n * std::pow(d, n) / (ball_boundary_area(n) * std::pow(std::norm(1.0 - zw), n));
    CVector out(z.dim());
    const Complex wz = std::conj(zw); // <w,z>
    for (std::size_t j = 0; j < z.dim(); ++j)
        out[j] = pref * (-z[j] / d + w[j] / (1.0 - wz));
    return out;
}

double kernel_grad_dot(const CVector& z, const CVector& w, const CVector& l) {
    require_unit_direction(l);
    return 2.0 * hermitian_inner(ps_kernel_dbar(z, w), l).real();
}

double poisson_eval(const HarmonicField& field, const CVector& z) {
    require_field_point(field, z);
    const auto h = checked(field.boundary);
    return integrate(*field.rule,
                     [&](const CVector& w) { return ps_kernel(z, w) * h(w); });
}

CVector poisson_dbar(const HarmonicField& field, const CVector& z) {
    require_field_point(field, z);
    const auto h = checked(field.boundary);
    const std::size_t n = z.dim();
    // Single pass over the nodes, one compensated accumulator per real slot,
    // fixed index order.
    std::vector<double> sum(2 * n, 0.0), comp(2 * n, 0.0);
    const QuadratureRule& rule = *field.rule;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double hv = h(rule.nodes[k]);
        const CVector db = ps_kernel_dbar(z, rule.nodes[k]);
        for (std::size_t j = 0; j < n; ++j) {
            const double parts[2] = {db[j].real(), db[j].imag()};
            for (int p = 0; p < 2; ++p) {
                const double v = rule.weights[k] * parts[p] * hv;
                if (!std::isfinite(v))
                    throw std::runtime_error("non-finite integrand value at node " +
                                             std::to_string(k));
                const std::size_t s = 2 * j + p;
                const double term = v - comp[s];
                const double next = sum[s] + term;
                comp[s] = (next - sum[s]) - term;
                sum[s] = next;
            }
        }
    }
    CVector out(n);
    for (std::size_t j = 0; j < n; ++j)
        out[j] = Complex(sum[2 * j], sum[2 * j + 1]);
    return out;
}

std::vector<double> poisson_gradient(const HarmonicField& field, const CVector& z) {
    const CVector d = poisson_dbar(field, z);
    std::vector<double> grad(2 * z.dim());
    for (std::size_t j = 0; j < z.dim(); ++j) {
        grad[2 * j] = 2.0 * d[j].real();
        grad[2 * j + 1] = 2.0 * d[j].imag();
    }
    return grad;
}

double invariant_laplacian_fd(const HarmonicField& field, const CVector& z,
                              double step) {
    require_field_point(field, z);
    if (z.norm() + 2.0 * step >= 1.0)
        throw std::domain_error("finite-difference stencil exits the ball");
    const std::size_t n = z.dim();
    const std::size_t m = 2 * n;
    const auto xs = z.reals();

    const auto eval_at = [&](std::vector<double> ys) {
        return poisson_eval(field, CVector::from_reals(ys));
    };
    const double f0 = eval_at(xs);

    // Real Hessian by central differences.
    std::vector<double> hess(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a) {
        auto yp = xs, ym = xs;
        yp[a] += step;
        ym[a] -= step;
        hess[a * m + a] = (eval_at(yp) + eval_at(ym) - 2.0 * f0) / (step * step);
        for (std::size_t b = a + 1; b < m; ++b) {
            auto pp = xs, pm = xs, mp = xs, mm = xs;
            pp[a] += step; pp[b] += step;
            pm[a] += step; pm[b] -= step;
            mp[a] -= step; mp[b] += step;
            mm[a] -= step; mm[b] -= step;
            const double v =
                (eval_at(pp) - eval_at(pm) - eval_at(mp) + eval_at(mm)) /
                (4.0 * step * step);
            hess[a * m + b] = hess[b * m + a] = v;
        }
    }

    // d^2/dz_i dzbar_j = ((Hxx + Hyy) + i (Hxy - Hyx)) / 4
    double lap = 0.0;
    const double d = 1.0 - z.norm_sq();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex mixed =
                0.25 * Complex(hess[(2 * i) * m + (2 * j)] +
                                   hess[(2 * i + 1) * m + (2 * j + 1)],
                               hess[(2 * i) * m + (2 * j + 1)] -
                                   hess[(2 * i + 1) * m + (2 * j)]);
            Complex factor = -z[i] * std::conj(z[j]);
            if (i == j) factor += 1.0;
            lap += (factor * mixed).real();
        }
    return 4.0 * d * lap;
}

double boundary_jacobian(const CVector& z, const CVector& eta) {
    require_interior(z);
    require_same_dim(z, eta);
    const int n = int(z.dim());
    const double d = 1.0 - z.norm_sq();
    const double q = std::norm(1.0 - hermitian_inner(z, eta));
    return std::pow(d / q, n);
}

double bergman_grad_norm(const HarmonicField& field, const CVector& z) {
    const CVector dbar = poisson_dbar(field, z);
    // h real, so dh/dz_j = conj(dh/dzbar_j).
    std::vector<Complex> dz(z.dim());
    for (std::size_t j = 0; j < z.dim(); ++j) dz[j] = std::conj(dbar[j]);
    return bergman_grad_norm_from_wirtinger(z, dz);
}

double kernel_peak(const HarmonicField& field, const CVector& z) {
    require_interior(z);
    double peak = 0.0;
    for (const CVector& w : field.rule->nodes)
        peak = std::max(peak, ps_kernel(z, w));
    return peak * field.rule->sigma();
}

} // namespace ballharm
