#include "ballharm/ball_core.hpp"

#include <cmath>

namespace ballharm {

namespace {
constexpr double kBoundaryTol = 1e-12;
constexpr double kZeroCenterTol = 1e-14;
} // namespace

void require_interior(const CVector& z) {
    if (z.norm() >= 1.0)
        throw std::domain_error("point is not in the open unit ball");
}

void require_boundary(const CVector& w) {
    if (std::abs(w.norm() - 1.0) > kBoundaryTol)
        throw std::domain_error("point is not on the unit sphere");
}

void require_unit_direction(const CVector& l) {
    if (std::abs(l.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("direction is not a unit vector");
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
    HermitianMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

double HermitianMatrix::max_conjugate_asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    return worst;
}

bool HermitianMatrix::is_positive_definite() const {
    // In-place complex Cholesky on a working copy.
    std::vector<Complex> a = entries_;
    const std::size_t n = dim_;
    for (std::size_t k = 0; k < n; ++k) {
        double pivot = a[k * n + k].real();
        for (std::size_t j = 0; j < k; ++j) pivot -= std::norm(a[k * n + j]);
        if (pivot <= 1e-12) return false;
        const double lkk = std::sqrt(pivot);
        a[k * n + k] = lkk;
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex s = a[i * n + k];
            for (std::size_t j = 0; j < k; ++j)
                s -= a[i * n + j] * std::conj(a[k * n + j]);
            a[i * n + k] = s / lkk;
        }
    }
    return true;
}

HermitianMatrix contract(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch");
    const std::size_t n = a.dim();
    HermitianMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Complex s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += a.at(i, j) * b.at(k, j);
            c.at(i, k) = s;
        }
    return c;
}

CVector mobius(const CVector& a, const CVector& z) {
    require_same_dim(a, z);
    require_interior(a);
    if (z.norm() > 1.0 + kBoundaryTol)
        throw std::domain_error("mobius argument outside the closed ball");
    const double na2 = a.norm_sq();
    if (na2 < kZeroCenterTol * kZeroCenterTol) return -z;

    const Complex za = hermitian_inner(z, a);
    const Complex denom = 1.0 - za;
    if (std::abs(denom) < 1e-14)
        throw std::domain_error("mobius singularity: <z,a> = 1");

    const double s_a = std::sqrt(1.0 - na2);
    CVector proj = (za / na2) * a;   // P_a(z)
    CVector perp = z - proj;         // Q_a(z)
    CVector num = a - proj - s_a * perp;
    return (Complex(1.0) / denom) * num;
}

std::pair<Complex, Complex> mobius_inner_identity(const CVector& a, const CVector& z,
                                         const CVector& w) {
    const Complex lhs = 1.0 - hermitian_inner(mobius(a, z), mobius(a, w));
    const Complex rhs = (1.0 - hermitian_inner(a, a)) * (1.0 - hermitian_inner(z, w)) /
                        ((1.0 - hermitian_inner(z, a)) * (1.0 - hermitian_inner(a, w)));
    return {lhs, rhs};
}

HermitianMatrix bergman_metric(const CVector& z) {
    require_interior(z);
    const std::size_t n = z.dim();
    const double d = 1.0 - z.norm_sq();
    HermitianMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex e = std::conj(z[i]) * z[j] / (d * d);
            if (i == j) e += 1.0 / d;
            g.at(i, j) = double(n + 1) * e;
        }
    return g;
}

HermitianMatrix bergman_metric_inverse(const CVector& z) {
    require_interior(z);
    const std::size_t n = z.dim();
    const double d = 1.0 - z.norm_sq();
    HermitianMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex e = -z[i] * std::conj(z[j]);
            if (i == j) e += 1.0;
            g.at(i, j) = d / double(n + 1) * e;
        }
    return g;
}

Complex bergman_kernel(const CVector& z, const CVector& w) {
    require_same_dim(z, w);
    require_interior(z);
    require_interior(w);
    return std::pow(1.0 - hermitian_inner(z, w), -double(z.dim() + 1));
}

double bergman_grad_norm_from_wirtinger(const CVector& z,
                                        std::span<const Complex> dh) {
    require_interior(z);
    if (dh.size() != z.dim())
        throw std::invalid_argument("derivative vector has wrong dimension");
    double sum_sq = 0.0;
    Complex radial = 0.0;
    for (std::size_t j = 0; j < z.dim(); ++j) {
        sum_sq += std::norm(dh[j]);
        radial += z[j] * dh[j];
    }
    const double d = 1.0 - z.norm_sq();
    const double val = d / double(z.dim() + 1) * (sum_sq - std::norm(radial));
    return std::sqrt(std::max(val, 0.0));
}

double hyperbolic_distance(const CVector& z, const CVector& w) {
    require_interior(z);
    require_interior(w);
    const double rho = mobius(z, w).norm();
    return std::sqrt(double(z.dim() + 1)) * std::atanh(rho);
}

} // namespace ballharm
