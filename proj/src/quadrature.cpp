#include "ballharm/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

namespace ballharm {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos, g = 7, 9 terms, with reflection for x < 1/2.
double lanczos_gamma(double x) {
    static const double coeff[9] = {
        0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
        771.32342877765313,   -176.61502916214059, 12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5)
        return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
    x -= 1.0;
    double a = coeff[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += coeff[i] / (x + double(i));
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
    x.assign(m, 0.0);
    w.assign(m, 0.0);
    const int half = (m + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= m; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[m - 1 - i] = t;
        w[i] = w[m - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

double frac(double x) { return x - std::floor(x); }

} // namespace

void gauss_legendre_interval(int m, double a, double b, std::vector<double>& x,
                             std::vector<double>& w) {
    gauss_legendre(m, x, w);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < m; ++i) {
        x[i] = mid + half * x[i];
        w[i] *= half;
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t bits =
        splitmix64(splitmix64(seed) + counter * 0x9E3779B97F4A7C15ULL);
    return (double(bits >> 11) + 0.5) * 0x1.0p-53;
}

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_fn requires x > 0");
    return lanczos_gamma(x);
}

double sphere_area(int k) {
    if (k < 1) throw std::invalid_argument("sphere_area requires k >= 1");
    return 2.0 * std::pow(kPi, 0.5 * k) / gamma_fn(0.5 * k);
}

QuadratureRule product_rule(int n, int level) {
    if (n < 1 || level < 1)
        throw std::invalid_argument("product_rule requires n >= 1, level >= 1");
    QuadratureRule rule;
    rule.dim = n;
    rule.kind = RuleKind::Product;
    rule.level_or_count = level;

    const double dpsi = 2.0 * kPi / level;
    if (n == 1) {
        rule.nodes.reserve(level);
        rule.weights.assign(level, dpsi);
        for (int k = 0; k < level; ++k)
            rule.nodes.push_back(CVector{std::polar(1.0, dpsi * k)});
        return rule;
    }

    std::vector<double> gx, gw;
    gauss_legendre(level, gx, gw);
    std::vector<double> theta(level), tw(level);
    for (int i = 0; i < level; ++i) {
        theta[i] = (gx[i] + 1.0) * (kPi / 4.0);
        tw[i] = gw[i] * (kPi / 4.0);
    }

    std::size_t theta_count = 1;
    for (int k = 0; k < n - 1; ++k) theta_count *= level;
    std::size_t psi_count = 1;
    for (int j = 0; j < n; ++j) psi_count *= level;

    rule.nodes.reserve(theta_count * psi_count);
    rule.weights.reserve(theta_count * psi_count);

    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    const double root2 = std::sqrt(2.0);

    std::vector<int> tidx(n - 1, 0);
    std::vector<double> radius(n), phase_re(n * level), phase_im(n * level);
    for (std::size_t it = 0; it < theta_count; ++it) {
        // radii r_1 = cos t_1, r_2 = sin t_1 cos t_2, ..., r_n = prod sin t_k
        double sines = 1.0;
        double jac = 1.0;
        double wt = 1.0;
        for (int k = 0; k < n - 1; ++k) {
            const double t = theta[tidx[k]];
            radius[k] = sines * std::cos(t);
            sines *= std::sin(t);
            wt *= tw[tidx[k]];
            jac *= std::pow(std::sin(t), double(n - 2 - k));
        }
        radius[n - 1] = sines;
        for (int j = 0; j < n; ++j) jac *= radius[j];
        const double w_theta = wt * jac * std::pow(dpsi, double(n));

        // staggered psi grids, one offset per (theta node, axis)
        for (int j = 0; j < n; ++j) {
            const double off = dpsi * frac(double(it) * golden + double(j) * root2);
            for (int k = 0; k < level; ++k) {
                const Complex ph = std::polar(1.0, dpsi * k + off);
                phase_re[j * level + k] = ph.real();
                phase_im[j * level + k] = ph.imag();
            }
        }

        std::vector<int> pidx(n, 0);
        for (std::size_t ip = 0; ip < psi_count; ++ip) {
            auto node = CVector(std::size_t(n));
            for (int j = 0; j < n; ++j)
                node[j] = radius[j] * Complex(phase_re[j * level + pidx[j]],
                                              phase_im[j * level + pidx[j]]);
            rule.nodes.push_back(std::move(node));
            rule.weights.push_back(w_theta);
            for (int j = n - 1; j >= 0; --j) {
                if (++pidx[j] < level) break;
                pidx[j] = 0;
            }
        }
        for (int k = n - 2; k >= 0; --k) {
            if (++tidx[k] < level) break;
            tidx[k] = 0;
        }
    }
    return rule;
}

QuadratureRule mc_rule(int n, int count, std::uint64_t seed) {
    if (n < 1 || count < 1)
        throw std::invalid_argument("mc_rule requires n >= 1, count >= 1");
    QuadratureRule rule;
    rule.dim = n;
    rule.kind = RuleKind::MonteCarlo;
    rule.level_or_count = count;
    rule.seed = seed;
    rule.nodes.reserve(count);
    rule.weights.assign(count, ball_boundary_area(n) / count);

    for (int i = 0; i < count; ++i) {
        auto node = CVector(std::size_t(n));
        for (int j = 0; j < n; ++j) {
            const std::uint64_t base = std::uint64_t(i) * (2 * n) + 2 * j;
            const double u1 = counter_uniform(seed, base);
            const double u2 = counter_uniform(seed, base + 1);
            const double rad = std::sqrt(-2.0 * std::log(u1));
            node[j] = Complex(rad * std::cos(2.0 * kPi * u2),
                              rad * std::sin(2.0 * kPi * u2));
        }
        const double nn = node.norm();
        node *= Complex(1.0 / nn);
        rule.nodes.push_back(std::move(node));
    }
    return rule;
}

double integrate(const QuadratureRule& rule,
                 const std::function<double(const CVector&)>& f) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double fv = f(rule.nodes[k]);
        if (!std::isfinite(fv))
            throw std::runtime_error("non-finite integrand value at node " +
                                     std::to_string(k));
        const double term = rule.weights[k] * fv - comp;
        const double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    return sum;
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
    struct Impl {
        const std::function<double(double)>& f;
        double recurse(double a, double fa, double b, double fb, double m,
                       double fm, double whole, double tol, int depth) {
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            const double delta = left + right - whole;
            if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
                return left + right + delta / 15.0;
            return recurse(a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
                   recurse(m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
        }
    } impl{f};
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return impl.recurse(a, fa, b, fb, m, fm, whole, tol, 48);
}

double cap_measure(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("cap_measure requires n >= 1");
    if (alpha < 0.0 || alpha > kPi)
        throw std::domain_error("cap polar angle must lie in [0,pi]");
    if (n == 1) return alpha / kPi;
    const auto integrand = [n](double t) {
        return std::pow(std::sin(t), 2.0 * n - 2.0);
    };
    const double num = adaptive_simpson(integrand, 0.0, alpha, 1e-14);
    const double den = adaptive_simpson(integrand, 0.0, kPi, 1e-14);
    return num / den;
}

double cap_alpha(int n, double c) {
    if (!(c > 0.0 && c < 1.0))
        throw std::domain_error("cap measure must lie in (0,1)");
    if (n == 1) return kPi * c;
    double lo = 0.0, hi = kPi;
    double mid = kPi * 0.5;
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double m = cap_measure(n, mid);
        if (std::abs(m - c) <= 1e-13) break;
        (m < c ? lo : hi) = mid;
    }
    return mid;
}

void write_rule(std::ostream& os, const QuadratureRule& rule) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", rule.sigma());
    os << "ball-quad v1 n=" << rule.dim << " kind="
       << (rule.kind == RuleKind::Product ? "product" : "mc")
       << " count=" << rule.nodes.size() << " sigma=" << buf << "\n";
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const auto xs = rule.nodes[k].reals();
        for (double x : xs) {
            std::snprintf(buf, sizeof buf, "%.17g", x);
            os << buf << ' ';
        }
        std::snprintf(buf, sizeof buf, "%.17g", rule.weights[k]);
        os << buf << "\n";
    }
}

QuadratureRule read_rule(std::istream& is) {
    std::string header;
    if (!std::getline(is, header))
        throw std::runtime_error("empty quadrature stream");
    QuadratureRule rule;
    std::size_t count = 0;
    {
        std::istringstream hs(header);
        std::string magic, version, tok;
        hs >> magic >> version;
        if (magic != "ball-quad" || version != "v1")
            throw std::runtime_error("bad quadrature header: " + header);
        while (hs >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq);
            const std::string val = tok.substr(eq + 1);
            if (key == "n") rule.dim = std::stoi(val);
            else if (key == "count") count = std::stoul(val);
            else if (key == "kind")
                rule.kind = (val == "mc") ? RuleKind::MonteCarlo : RuleKind::Product;
        }
    }
    if (rule.dim < 1) throw std::runtime_error("bad quadrature dimension");
    rule.level_or_count = int(count);
    std::vector<double> xs(2 * rule.dim);
    for (std::size_t k = 0; k < count; ++k) {
        for (double& x : xs)
            if (!(is >> x)) throw std::runtime_error("truncated quadrature node");
        double w = 0.0;
        if (!(is >> w)) throw std::runtime_error("truncated quadrature weight");
        rule.nodes.push_back(CVector::from_reals(xs));
        rule.weights.push_back(w);
    }
    return rule;
}

} // namespace ballharm
