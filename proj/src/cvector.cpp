#include "ballharm/cvector.hpp"

#include <cmath>

namespace ballharm {

CVector CVector::basis(std::size_t n, std::size_t j) {
    if (j >= n) throw std::invalid_argument("basis index out of range");
    CVector e(n);
    e[j] = 1.0;
    return e;
}

CVector CVector::from_reals(std::span<const double> xs) {
    if (xs.size() % 2 != 0)
        throw std::invalid_argument("interleaved coordinate count must be even");
    CVector z(xs.size() / 2);
    for (std::size_t j = 0; j < z.dim(); ++j)
        z[j] = Complex(xs[2 * j], xs[2 * j + 1]);
    return z;
}

double CVector::norm_sq() const {
    double s = 0.0;
    for (const Complex& c : coords_) s += std::norm(c);
    return s;
}

double CVector::norm() const { return std::sqrt(norm_sq()); }

std::vector<double> CVector::reals() const {
    std::vector<double> xs(2 * coords_.size());
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        xs[2 * j] = coords_[j].real();
        xs[2 * j + 1] = coords_[j].imag();
    }
    return xs;
}

CVector& CVector::operator+=(const CVector& o) {
    require_same_dim(*this, o);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += o[j];
    return *this;
}

CVector& CVector::operator-=(const CVector& o) {
    require_same_dim(*this, o);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= o[j];
    return *this;
}

CVector& CVector::operator*=(Complex c) {
    for (Complex& x : coords_) x *= c;
    return *this;
}

Complex hermitian_inner(const CVector& z, const CVector& w) {
    require_same_dim(z, w);
    Complex s = 0.0;
    for (std::size_t j = 0; j < z.dim(); ++j) s += z[j] * std::conj(w[j]);
    return s;
}

} // namespace ballharm
