#pragma once

#include "ballharm/ball_core.hpp"
#include "ballharm/quadrature.hpp"

#include <memory>
#include <string>

namespace ballharm {

struct BoundaryFunction {
    int dim = 0;
    std::function<double(const CVector&)> eval;
    double sup_bound = 1.0;
    bool discontinuous = false;
    std::string label;
};

// An invariant harmonic function represented as the Poisson integral of its
// boundary data against a fixed quadrature rule.
struct HarmonicField {
    BoundaryFunction boundary;
    std::shared_ptr<const QuadratureRule> rule;
    double fd_step = 1e-4;
    // Fixed rules cannot follow the kernel peak; evaluation with
    // ||z|| > radius_limit is refused unless allow_near_boundary is set.
    double radius_limit = 0.95;
    bool allow_near_boundary = false;
};

HarmonicField make_field(BoundaryFunction boundary,
                         std::shared_ptr<const QuadratureRule> rule);

// P_z(w) = (1/sigma) (1-||z||^2)^n / |1-<z,w>|^{2n}
double ps_kernel(const CVector& z, const CVector& w);

// dP_z/dzbar, componentwise:
// n (1-||z||^2)^n / (sigma |1-<z,w>|^{2n}) (-z/(1-||z||^2) + w/(1-<w,z>)).
CVector ps_kernel_dbar(const CVector& z, const CVector& w);

// grad P_z . l = 2 Re <dP_z/dzbar, l>, the real directional derivative.
double kernel_grad_dot(const CVector& z, const CVector& w, const CVector& l);

// h(z) = integral of P_z(w) h*(w) dsigma(w)
double poisson_eval(const HarmonicField& field, const CVector& z);

// D_j = integral of (dP_z/dzbar_j) h*(w) dsigma(w), i.e. dh/dzbar_j.
CVector poisson_dbar(const HarmonicField& field, const CVector& z);

// Euclidean gradient as a real 2n-vector, from grad h = 4 Re sum_j
// (dh/dzbar_j) d/dz_j: entries (2 Re D_j, 2 Im D_j).
std::vector<double> poisson_gradient(const HarmonicField& field, const CVector& z);

// 4(1-||z||^2) sum_{i,j} (delta_ij - z_i conj(z_j)) d^2h/dz_i dzbar_j with
// second derivatives from central differences on the real coordinates.
double invariant_laplacian_fd(const HarmonicField& field, const CVector& z,
                              double step);

// Boundary change-of-variables factor ((1-||z||^2)/|1-<z,eta>|^2)^n.
double boundary_jacobian(const CVector& z, const CVector& eta);

// ||grad_B h(z)||_B via the Wirtinger derivatives of the Poisson integral.
double bergman_grad_norm(const HarmonicField& field, const CVector& z);

// Peaking diagnostic max over nodes of P_z(w) * sigma.
double kernel_peak(const HarmonicField& field, const CVector& z);

} // namespace ballharm
