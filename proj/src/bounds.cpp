#include "ballharm/bounds.hpp"

#include "ballharm/sharpness.hpp"

#include <cmath>

namespace ballharm {

double bergman_bound_constant(int n) {
    return sharp_constant(n) / std::sqrt(double(n + 1));
}

VerificationReport bergman_bound_check(const HarmonicField& field,
                                       const CVector& z, double tolerance) {
    if (field.boundary.sup_bound > 1.0)
        throw std::invalid_argument("bergman_bound_check requires sup_bound <= 1");
    const int n = int(z.dim());
    const auto grad = poisson_gradient(field, z);
    double g2 = 0.0;
    for (double g : grad) g2 += g * g;
    const double a =
        (1.0 - z.norm_sq()) * std::sqrt(g2) / (2.0 * std::sqrt(double(n + 1)));
    const double b = bergman_grad_norm(field, z);
    const double c = bergman_bound_constant(n);

    VerificationReport r = make_report(
        "bergman.bound", b, c, tolerance,
        {{"n", std::to_string(n)},
         {"radius", format_full(z.norm())},
         {"a_lower", format_full(a)},
         {"lower_slack", format_full(b - a)},
         {"ratio_b_over_c", format_full(b / c)}});
    // Both inequalities must hold.
    r.pass = r.pass && (a <= b + tolerance);
    return r;
}

VerificationReport lipschitz_check(const HarmonicField& field, const CVector& z,
                                   const CVector& w, double tolerance) {
    if (field.boundary.sup_bound > 1.0)
        throw std::invalid_argument("lipschitz_check requires sup_bound <= 1");
    const double lhs = std::abs(poisson_eval(field, z) - poisson_eval(field, w));
    const double rhs =
        bergman_bound_constant(int(z.dim())) * hyperbolic_distance(z, w);
    return make_report("bergman.lipschitz", lhs, rhs, tolerance,
                       {{"n", std::to_string(z.dim())},
                        {"distance", format_full(hyperbolic_distance(z, w))}});
}

double jacobian_operator_norm(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return 0.0;
    const std::size_t m = rows.size();
    const std::size_t d = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != d) throw std::invalid_argument("ragged Jacobian");

    // G = J^T J, d x d.
    std::vector<double> gram(d * d, 0.0);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                gram[i * d + j] += rows[k][i] * rows[k][j];

    std::vector<double> v(d, 1.0 / std::sqrt(double(d))), gv(d);
    double lambda = 0.0;
    for (int iter = 0; iter < 1000; ++iter) {
        for (std::size_t i = 0; i < d; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) s += gram[i * d + j] * v[j];
            gv[i] = s;
        }
        double nn = 0.0;
        for (double x : gv) nn += x * x;
        nn = std::sqrt(nn);
        if (nn == 0.0) return 0.0;
        double next = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = gv[i] / nn;
            next += v[i] * gv[i];
        }
        if (std::abs(nn - lambda) <= 1e-12 * std::max(1.0, nn)) {
            lambda = nn;
            break;
        }
        lambda = nn;
    }
    return std::sqrt(lambda);
}

VerificationReport operator_norm_check(const VectorField& H, const CVector& z,
                                       double tolerance) {
    if (H.components.empty())
        throw std::invalid_argument("vector field must have m >= 1 components");
    // Hypothesis spot check at z.
    double hz2 = 0.0;
    std::vector<std::vector<double>> rows;
    rows.reserve(H.m());
    for (const auto& comp : H.components) {
        const double v = poisson_eval(comp, z);
        hz2 += v * v;
        rows.push_back(poisson_gradient(comp, z));
    }
    if (hz2 > 1.0 + 1e-6)
        throw std::invalid_argument("||H(z)|| exceeds 1 at the sampled point");

    const int n = int(z.dim());
    const double lhs = jacobian_operator_norm(rows);
    const double rhs = sharp_constant(n) / (1.0 - z.norm_sq());
    return make_report("vectorfield.operator_norm", lhs, rhs, tolerance,
                       {{"n", std::to_string(n)},
                        {"m", std::to_string(H.m())},
                        {"radius", format_full(z.norm())}});
}

} // namespace ballharm
