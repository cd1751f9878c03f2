#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace ballharm {

using Complex = std::complex<double>;

// A point of C^n. Storage is std::complex, which is bit-compatible with
// interleaved (Re z_1, Im z_1, ..., Re z_n, Im z_n) real coordinates; the
// reals()/from_reals() pair exposes that layout for node tables and CSV.
class CVector {
public:
    CVector() = default;
    explicit CVector(std::size_t n) : coords_(n) {}
    CVector(std::initializer_list<Complex> cs) : coords_(cs) {}
    explicit CVector(std::vector<Complex> cs) : coords_(std::move(cs)) {}

    static CVector zero(std::size_t n) { return CVector(n); }
    static CVector basis(std::size_t n, std::size_t j);
    static CVector from_reals(std::span<const double> xs);

    std::size_t dim() const { return coords_.size(); }
    Complex& operator[](std::size_t j) { return coords_[j]; }
    const Complex& operator[](std::size_t j) const { return coords_[j]; }

    double norm_sq() const;
    double norm() const;

    std::vector<double> reals() const;

    CVector& operator+=(const CVector& o);
    CVector& operator-=(const CVector& o);
    CVector& operator*=(Complex c);

    friend CVector operator+(CVector a, const CVector& b) { return a += b; }
    friend CVector operator-(CVector a, const CVector& b) { return a -= b; }
    friend CVector operator*(Complex c, CVector a) { return a *= c; }
    friend CVector operator*(double c, CVector a) { return a *= Complex(c); }
    friend CVector operator-(CVector a) { return a *= Complex(-1.0); }

private:
    std::vector<Complex> coords_;
};

// <z,w> = sum_j z_j conj(w_j)
Complex hermitian_inner(const CVector& z, const CVector& w);

inline void require_same_dim(const CVector& z, const CVector& w) {
    if (z.dim() != w.dim())
        throw std::invalid_argument("dimension mismatch");
}

} // namespace ballharm
