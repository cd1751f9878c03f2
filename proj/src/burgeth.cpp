#include "ballharm/burgeth.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

namespace ballharm {

namespace {
constexpr double kPi = std::numbers::pi;

// Fixed unit vector in generic position relative to the product-rule torus
// grids.  With the cap axis on a grid symmetry line the indicator's jump sits
// on the same spot of every psi circle and the quadrature error stalls near
// 1e-3; a generic axis lets the staggered grids average it away.
CVector generic_axis(int n) {
    auto u = CVector(std::size_t(n));
    for (int j = 0; j < n; ++j) {
        const double a = counter_uniform(0xB17E5EEDu, 2 * j);
        const double b = counter_uniform(0xB17E5EEDu, 2 * j + 1);
        const double rho = std::sqrt(-2.0 * std::log(a));
        u[j] = Complex(rho * std::cos(2.0 * kPi * b),
                       rho * std::sin(2.0 * kPi * b));
    }
    u *= Complex(1.0 / u.norm());
    return u;
}
} // namespace

CapSpec make_cap(int n, const CVector& center, double c) {
    if (!(c > 0.0 && c < 1.0))
        throw std::domain_error("cap measure must lie in (0,1)");
    require_boundary(center);
    CapSpec spec;
    spec.dim = n;
    spec.center = center;
    spec.c = c;
    spec.alpha = cap_alpha(n, c);
    return spec;
}

BoundaryFunction cap_indicator(const CapSpec& spec) {
    BoundaryFunction b;
    b.dim = spec.dim;
    b.sup_bound = 1.0;
    b.discontinuous = true;
    b.label = "cap indicator c=" + format_full(spec.c);
    const CVector center = spec.center;
    const double threshold = std::cos(spec.alpha);
    b.eval = [center, threshold](const CVector& w) {
        return hermitian_inner(center, w).real() > threshold ? 1.0 : 0.0;
    };
    return b;
}

double m_envelope(int n, double c, double r, const QuadratureRule& rule) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radius must lie in [0,1)");
    const CVector axis = generic_axis(n);
    const CapSpec spec = make_cap(n, axis, c);
    // Non-owning view; the field does not outlive this call.
    std::shared_ptr<const QuadratureRule> rule_ptr(&rule, [](const QuadratureRule*) {});
    HarmonicField field = make_field(cap_indicator(spec), rule_ptr);
    field.allow_near_boundary = true; // caller controls the radius grid
    CVector z = axis;
    z *= Complex(r);
    return 2.0 * poisson_eval(field, z) - 1.0;
}

double m_closed_n1(double c, double r) {
    if (!(c > 0.0 && c < 1.0))
        throw std::domain_error("cap measure must lie in (0,1)");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radius must lie in [0,1)");
    const double alpha = kPi * c;
    return 4.0 / kPi *
               std::atan((1.0 + r) / (1.0 - r) * std::tan(0.5 * alpha)) -
           1.0;
}

double m_double_integral(int n, double c, double r, int level) {
    if (n < 2)
        throw std::invalid_argument(
            "double-integral representation requires n >= 2");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radius must lie in [0,1)");
    const double alpha = cap_alpha(n, c);

    std::vector<double> x1, w1, x2, w2;
    gauss_legendre_interval(level, 0.0, alpha, x1, w1);
    gauss_legendre_interval(level, 0.0, kPi, x2, w2);

    double sum = 0.0;
    for (int i = 0; i < level; ++i) {
        const double s1 = std::sin(x1[i]), c1 = std::cos(x1[i]);
        double inner = 0.0;
        for (int j = 0; j < level; ++j) {
            const double a = 1.0 - r * c1;
            const double b = r * s1 * std::cos(x2[j]);
            inner += w2[j] * std::pow(std::sin(x2[j]), 2.0 * n - 3.0) /
                     std::pow(a * a + b * b, double(n));
        }
        sum += w1[i] * std::pow(s1, 2.0 * n - 2.0) * inner;
    }
    const double pref = 2.0 * gamma_fn(double(n)) *
                        std::pow(1.0 - r * r, double(n)) /
                        (kPi * gamma_fn(double(n - 1)));
    return pref * sum - 1.0;
}

VerificationReport schwarz_check(const HarmonicField& field, const CVector& z,
                                 double tolerance) {
    if (field.boundary.sup_bound > 1.0)
        throw std::invalid_argument("schwarz_check requires sup_bound <= 1");
    const int n = field.boundary.dim;
    const double a = poisson_eval(field, CVector::zero(z.dim()));
    if (std::abs(a) >= 1.0 - 1e-9)
        throw std::domain_error("degenerate field: h(0) = +-1");
    const double c = 0.5 * (a + 1.0);
    const double lhs = poisson_eval(field, z);
    const double rhs = m_envelope(n, c, z.norm(), *field.rule);
    return make_report("envelope.schwarz", lhs, rhs, tolerance,
                       {{"n", std::to_string(n)},
                        {"radius", format_full(z.norm())},
                        {"h0", format_full(a)},
                        {"c", format_full(c)}});
}

BurgethCurve burgeth_curve(int n, double c, const std::vector<double>& radii,
                           BurgethMethod method, const QuadratureRule* rule) {
    BurgethCurve curve;
    curve.dim = n;
    curve.c = c;
    curve.radii = radii;
    curve.method = method;
    for (double r : radii) {
        switch (method) {
        case BurgethMethod::IndicatorQuadrature:
            if (!rule)
                throw std::invalid_argument("indicator method needs a rule");
            curve.values.push_back(m_envelope(n, c, r, *rule));
            break;
        case BurgethMethod::ClosedFormN1:
            if (n != 1)
                throw std::invalid_argument("closed form is n = 1 only");
            curve.values.push_back(m_closed_n1(c, r));
            break;
        case BurgethMethod::DoubleIntegral:
            curve.values.push_back(m_double_integral(n, c, r));
            break;
        }
    }
    return curve;
}

const char* method_name(BurgethMethod m) {
    switch (m) {
    case BurgethMethod::IndicatorQuadrature: return "indicator-quadrature";
    case BurgethMethod::ClosedFormN1: return "closed-form-n1";
    case BurgethMethod::DoubleIntegral: return "double-integral";
    }
    return "?";
}

void write_curve_csv(std::ostream& os, const BurgethCurve& curve) {
    os << "r,M,method,n,c\n";
    for (std::size_t i = 0; i < curve.radii.size(); ++i)
        os << format_full(curve.radii[i]) << ',' << format_full(curve.values[i])
           << ',' << method_name(curve.method) << ',' << curve.dim << ','
           << format_full(curve.c) << "\n";
}

} // namespace ballharm
