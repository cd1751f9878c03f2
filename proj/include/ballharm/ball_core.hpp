#pragma once

#include "ballharm/cvector.hpp"

#include <span>
#include <utility>

namespace ballharm {

// n x n complex matrix with conjugate symmetry, row-major.
class HermitianMatrix {
public:
    explicit HermitianMatrix(std::size_t n) : dim_(n), entries_(n * n) {}

    std::size_t dim() const { return dim_; }
    Complex& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    static HermitianMatrix identity(std::size_t n);

    // Cholesky with pivot tolerance 1e-12.
    bool is_positive_definite() const;

    double max_conjugate_asymmetry() const;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

// Pairing of a lower-index metric with an upper-index inverse:
// c_ik = sum_j a_{i jbar} b_{k jbar}.  With g and g^{-1} this is the identity.
HermitianMatrix contract(const HermitianMatrix& a, const HermitianMatrix& b);

// phi_a(z) = (a - P_a(z) - s_a Q_a(z)) / (1 - <z,a>), the involutive ball
// automorphism swapping 0 and a.  phi_0(z) = -z, and a with ||a|| < 1e-14
// falls back to that limit.
CVector mobius(const CVector& a, const CVector& z);

// Both sides of 1 - <phi_a(z),phi_a(w)>
//   = (1-<a,a>)(1-<z,w>) / ((1-<z,a>)(1-<a,w>)).
std::pair<Complex, Complex> mobius_inner_identity(const CVector& a, const CVector& z,
                                         const CVector& w);

// g_{i jbar} = (n+1) (delta_ij/(1-||z||^2) + conj(z_i) z_j/(1-||z||^2)^2)
HermitianMatrix bergman_metric(const CVector& z);

// g^{i jbar} = (1-||z||^2)/(n+1) (delta_ij - z_i conj(z_j))
HermitianMatrix bergman_metric_inverse(const CVector& z);

// K(z,w) = (1 - <z,w>)^{-(n+1)}
Complex bergman_kernel(const CVector& z, const CVector& w);

// ||grad_B h(z)||_B from the holomorphic Wirtinger derivatives dh_j = dh/dz_j:
// sqrt( (1-||z||^2)/(n+1) ( sum_j |dh_j|^2 - |sum_j z_j dh_j|^2 ) ).
double bergman_grad_norm_from_wirtinger(const CVector& z,
                                        std::span<const Complex> dh);

// sqrt(n+1) * atanh(||phi_z(w)||)
double hyperbolic_distance(const CVector& z, const CVector& w);

void require_interior(const CVector& z);
void require_boundary(const CVector& w);
void require_unit_direction(const CVector& l);

} // namespace ballharm
