#pragma once

#include "ballharm/poisson.hpp"
#include "ballharm/report.hpp"

#include <iosfwd>

namespace ballharm {

struct CapSpec {
    int dim = 0;
    CVector center; // boundary point zhat
    double c = 0.0; // normalized measure in (0,1)
    double alpha = 0.0;
};

CapSpec make_cap(int n, const CVector& center, double c);

// w -> 1 if Re<zhat,w> > cos alpha(c) else 0.
BoundaryFunction cap_indicator(const CapSpec& spec);

// M_c^n(r) = 2 * P[cap indicator](r zhat) - 1.  By rotation invariance the
// cap axis zhat is free; it is placed in generic position relative to the
// product-rule grids, which cuts the indicator's quadrature error by an
// order of magnitude versus an axis-aligned cap.
double m_envelope(int n, double c, double r, const QuadratureRule& rule);

// n = 1 closed form (4/pi) arctan((1+r)/(1-r) tan(alpha/2)) - 1, alpha = pi c.
double m_closed_n1(double c, double r);

// n >= 2 double-integral representation, tensor Gauss-Legendre with `level`
// points per axis (>= 64 pinned for r <= 0.8).
double m_double_integral(int n, double c, double r, int level = 64);

// h(z) <= M_c^n(||z||) with c = (h(0)+1)/2.
VerificationReport schwarz_check(const HarmonicField& field, const CVector& z,
                                 double tolerance);

enum class BurgethMethod { IndicatorQuadrature, ClosedFormN1, DoubleIntegral };

struct BurgethCurve {
    int dim = 0;
    double c = 0.0;
    std::vector<double> radii;
    std::vector<double> values;
    BurgethMethod method = BurgethMethod::IndicatorQuadrature;
};

BurgethCurve burgeth_curve(int n, double c, const std::vector<double>& radii,
                           BurgethMethod method, const QuadratureRule* rule);

// CSV: header r,M,method,n,c
void write_curve_csv(std::ostream& os, const BurgethCurve& curve);
const char* method_name(BurgethMethod m);

} // namespace ballharm
