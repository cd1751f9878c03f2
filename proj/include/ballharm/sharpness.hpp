#pragma once

#include "ballharm/poisson.hpp"
#include "ballharm/report.hpp"

#include <iosfwd>
#include <optional>

namespace ballharm {

// 2 Gamma(n+1) / (sqrt(pi) Gamma(n+1/2)); 4/pi at n = 1.
double sharp_constant(int n);

// v(z,l) = s_z l + (1-s_z) <l,z> z/||z||^2 with s_z = sqrt(1-||z||^2),
// and v(0,l) = l.  Satisfies ||v||^2 = 1 - ||z||^2 + |<l,z>|^2.
CVector v_vector(const CVector& z, const CVector& l);

// Closed form 2n ||v|| / (1-||z||^2) * Gamma(n) / (sqrt(pi) Gamma(n+1/2)).
double c_closed(const CVector& z, const CVector& l);

// Direct integral of |grad P_z . l| over the boundary.
double c_quadrature(const CVector& z, const CVector& l, const QuadratureRule& rule);

// Mobius-transformed form 2n/(sigma (1-||z||^2)) * integral |Re<eta,v>|.
double c_transformed(const CVector& z, const CVector& l, const QuadratureRule& rule);

// h*_{z,l}(w) = sgn(Re<phi_z(w), v(z,l)>), with sgn(0) := +1.
BoundaryFunction extremal_boundary(const CVector& z, const CVector& l);

HarmonicField extremal_field(const CVector& z, const CVector& l,
                             std::shared_ptr<const QuadratureRule> rule);

struct DirectionalProfile {
    CVector z;
    std::vector<CVector> directions;
    std::vector<double> closed_values;
    std::vector<double> quadrature_values; // NaN when no rule was supplied
    CVector argmax_direction;
    bool degenerate = false; // z = 0: all directions tie
};

// Profile of l -> C(z,l) over grid_size equidistributed unit directions plus
// the exact radial and tangential axes.  quadrature_values are filled when a
// rule is given.
DirectionalProfile khavinson_argmax(const CVector& z, int grid_size,
                                    const QuadratureRule* rule = nullptr);

// ||grad h(z)|| (1-||z||^2) <= sharp_constant(n) for |h*| <= 1.
VerificationReport gradient_bound_check(const HarmonicField& field,
                                        const CVector& z, double tolerance);

// CSV: header dir_index,l_0,...,l_{2n-1},c_closed,c_quadrature.
void write_profile_csv(std::ostream& os, const DirectionalProfile& profile);

} // namespace ballharm
