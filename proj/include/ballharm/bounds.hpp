#pragma once

#include "ballharm/poisson.hpp"
#include "ballharm/report.hpp"

namespace ballharm {

// H = (h_1, ..., h_m) with invariant harmonic components sharing a rule.
struct VectorField {
    std::vector<HarmonicField> components;

    std::size_t m() const { return components.size(); }
    int dim() const { return components.empty() ? 0 : components.front().boundary.dim; }
};

// Bergman-gradient bound constant 2 Gamma(n+1) / (sqrt(pi (n+1)) Gamma(n+1/2)).
double bergman_bound_constant(int n);

// a = (1-||z||^2) ||grad h|| / (2 sqrt(n+1)) <= b = ||grad_B h||_B <= c.
// Report: lhs/rhs cover b <= c; metadata carries a, the a <= b slack, and the
// ratio b/c.
VerificationReport bergman_bound_check(const HarmonicField& field,
                                       const CVector& z, double tolerance);

// |h(z)-h(w)| <= bergman_bound_constant(n) * sqrt(n+1) atanh(||phi_z(w)||).
VerificationReport lipschitz_check(const HarmonicField& field, const CVector& z,
                                   const CVector& w, double tolerance);

// Largest singular value of the m x 2n Jacobian, by power iteration on J^T J
// with deterministic all-ones start.
double jacobian_operator_norm(const std::vector<std::vector<double>>& rows);

// operator norm of grad H(z) <= sharp_constant(n)/(1-||z||^2) for ||H|| <= 1.
VerificationReport operator_norm_check(const VectorField& H, const CVector& z,
                                       double tolerance);

} // namespace ballharm
