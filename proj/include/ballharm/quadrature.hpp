#pragma once

#include "ballharm/cvector.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>

namespace ballharm {

double gamma_fn(double x);

// sigma(S^{k-1}) = 2 pi^{k/2} / Gamma(k/2)
double sphere_area(int k);

// Surface area of the boundary sphere of B^n in C^n, i.e. sigma(S^{2n-1}).
inline double ball_boundary_area(int n) { return sphere_area(2 * n); }

enum class RuleKind { Product, MonteCarlo };

struct QuadratureRule {
    int dim = 0;                 // n, so nodes live on S^{2n-1}
    RuleKind kind = RuleKind::Product;
    int level_or_count = 0;
    std::uint64_t seed = 0;      // Monte Carlo only
    std::vector<CVector> nodes;
    std::vector<double> weights;

    double sigma() const { return ball_boundary_area(dim); }
};

// Polar-torus product rule on S^{2n-1}: w_j = e^{i psi_j} r_j(theta) with
// Gauss-Legendre points in each theta_k in [0,pi/2] and `level` uniform
// points in each psi_j.  Each theta node carries its own deterministic phase
// offset of the psi grids; kink positions of |.|-type integrands then vary
// across theta lines and the trapezoid errors largely cancel.
QuadratureRule product_rule(int n, int level);

// N i.i.d. uniform nodes from a counter-based splitmix64 stream + Box-Muller,
// weights sigma/N.  Identical (n, N, seed) reproduce bit-identical nodes.
QuadratureRule mc_rule(int n, int count, std::uint64_t seed);

// Fixed-index compensated (Kahan) summation of weight * f(node).
double integrate(const QuadratureRule& rule,
                 const std::function<double(const CVector&)>& f);

// Normalized measure of the cap {w : Re<zhat,w> > cos alpha} on S^{2n-1}.
double cap_measure(int n, double alpha);

// Inverse of cap_measure in alpha, to |delta measure| <= 1e-12.
double cap_alpha(int n, double c);

// Gauss-Legendre nodes/weights mapped to [a,b].
void gauss_legendre_interval(int m, double a, double b, std::vector<double>& x,
                             std::vector<double>& w);

// Adaptive Simpson on [a,b]; shared 1-D reference oracle.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-13);

// Text format: header "ball-quad v1 n=<n> kind=<product|mc> count=<k>
// sigma=<float>" then one node-weight per line (2n+1 floats).
void write_rule(std::ostream& os, const QuadratureRule& rule);
QuadratureRule read_rule(std::istream& is);

// Deterministic counter-based generator used by mc_rule and direction grids.
std::uint64_t splitmix64(std::uint64_t x);
double counter_uniform(std::uint64_t seed, std::uint64_t counter);

} // namespace ballharm
