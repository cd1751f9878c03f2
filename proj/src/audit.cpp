#include "ballharm/audit.hpp"

#include "ballharm/ball_core.hpp"
#include "ballharm/bounds.hpp"
#include "ballharm/burgeth.hpp"
#include "ballharm/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ballharm {

namespace {
constexpr double kPi = std::numbers::pi;

double counter_gaussian(std::uint64_t seed, std::uint64_t counter) {
    const double u1 = counter_uniform(seed, 2 * counter);
    const double u2 = counter_uniform(seed, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

} // namespace

int kink_rule_level(int n) {
    switch (n) {
    case 1: return 1024;
    case 2: return 48;
    case 3: return 16;
    case 4: return 8;
    case 5: return 5;
    default: return 4;
    }
}

int normalization_rule_level(int n) {
    switch (n) {
    case 1: return 256;
    case 2: return 32;
    case 3: return 22;
    case 4: return 8;
    case 5: return 5;
    default: return 4;
    }
}

int envelope_rule_level(int n) {
    switch (n) {
    case 1: return 8192;
    case 2: return 48;
    case 3: return 16;
    case 4: return 8;
    case 5: return 5;
    default: return 4;
    }
}

void RunConfig::validate() const {
    if (dim < 1 || dim > 6)
        throw std::invalid_argument("dim must lie in [1,6]");
    if (quad_level < 2) throw std::invalid_argument("quad_level must be >= 2");
    if (mc_samples < 1000)
        throw std::invalid_argument("mc_samples must be >= 1000");
    if (!(tol_smooth > 0.0) || !(tol_nonsmooth > 0.0))
        throw std::invalid_argument("tolerances must be positive");
    if (radii.empty()) throw std::invalid_argument("radius grid is empty");
    for (double r : radii)
        if (!(r >= 0.0 && r < 1.0))
            throw std::invalid_argument("radii must lie in [0,1)");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");
}

BoundaryFunction random_smooth_boundary(int n, std::uint64_t seed,
                                        std::uint64_t index) {
    const std::uint64_t base = index * 1000;
    auto u = CVector(std::size_t(n));
    for (int j = 0; j < n; ++j)
        u[j] = Complex(counter_gaussian(seed, base + 2 * j),
                       counter_gaussian(seed, base + 2 * j + 1));
    const double scale = 0.5 + 2.5 * counter_uniform(seed, base + 100);
    const double phase = 2.0 * kPi * counter_uniform(seed, base + 101);
    BoundaryFunction b;
    b.dim = n;
    b.sup_bound = 1.0;
    b.label = "smooth cosine #" + std::to_string(index);
    b.eval = [u, scale, phase](const CVector& w) {
        return std::cos(scale * hermitian_inner(w, u).real() + phase);
    };
    return b;
}

CVector random_interior_point(int n, std::uint64_t seed, std::uint64_t index,
                              double max_radius) {
    const std::uint64_t base = 0x700000 + index * 64;
    auto z = CVector(std::size_t(n));
    for (int j = 0; j < n; ++j)
        z[j] = Complex(counter_gaussian(seed, base + 2 * j),
                       counter_gaussian(seed, base + 2 * j + 1));
    const double u = counter_uniform(seed, 2 * (base + 2 * n));
    const double r = max_radius * std::pow(u, 1.0 / (2.0 * n));
    z *= Complex(r / z.norm());
    return z;
}

CVector random_direction(int n, std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t base = 0x900000 + index * 64;
    auto l = CVector(std::size_t(n));
    for (int j = 0; j < n; ++j)
        l[j] = Complex(counter_gaussian(seed, base + 2 * j),
                       counter_gaussian(seed, base + 2 * j + 1));
    l *= Complex(1.0 / l.norm());
    return l;
}

bool AuditResult::all_pass() const {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.pass; });
}

nlohmann::json AuditResult::to_json(const RunConfig& config) const {
    nlohmann::json cfg{{"dim", config.dim},
                       {"quad_level", config.quad_level},
                       {"mc_samples", config.mc_samples},
                       {"seed", config.seed},
                       {"tol_smooth", config.tol_smooth},
                       {"tol_nonsmooth", config.tol_nonsmooth},
                       {"radii", config.radii},
                       {"hyperbolic_distance",
                        "sqrt(n+1)*atanh(||phi_z(w)||) (pinned normalization)"}};
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& r : reports) reps.push_back(r.to_json());
    return nlohmann::json{{"config", cfg},
                          {"reports", reps},
                          {"diagnostics", diagnostics},
                          {"timing",
                           {{"integrand_evaluations", integrand_evaluations},
                            {"report_count", reports.size()}}}};
}

AuditResult run_audit(const RunConfig& config) {
    config.validate();
    AuditResult out;
    const int n = config.dim;
    const std::uint64_t seed = config.seed;
    // Product rules need level^(2n-1) nodes, so past n = 3 the affordable
    // levels are coarse; integration-backed checks then run with loosened
    // tolerances while the purely algebraic suites keep their budgets.
    const bool high_dim = n > 3;
    const double smooth_tol = high_dim ? 1e-2 : config.tol_smooth;
    const double nonsmooth_tol = high_dim ? 5e-2 : config.tol_nonsmooth;
    auto add = [&](VerificationReport r) { out.reports.push_back(std::move(r)); };

    // ---- ball-core ----------------------------------------------------
    {
        double worst_inv = 0.0, worst_identity = 0.0, worst_shrink = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const CVector a = random_interior_point(n, seed, 4 * i, 0.95);
            const CVector z = random_interior_point(n, seed, 4 * i + 1, 0.95);
            const CVector w = random_interior_point(n, seed, 4 * i + 2, 0.95);
            worst_inv = std::max(worst_inv, (mobius(a, mobius(a, z)) - z).norm());
            const auto [lhs, rhs] = mobius_inner_identity(a, z, w);
            worst_identity = std::max(worst_identity, std::abs(lhs - rhs) / std::abs(rhs));
            worst_shrink = std::max(worst_shrink, mobius(a, z).norm() - 1.0);
        }
        add(make_report("ballcore.involution", worst_inv, 0.0, 1e-10));
        add(make_report("ballcore.mobius_inner_identity", worst_identity, 0.0, 1e-12));
        add(make_report("ballcore.norm_shrink", worst_shrink, 0.0, 0.0));

        double worst_metric = 0.0, pd_failures = 0.0;
        for (int i = 0; i < 50; ++i) {
            const CVector z = random_interior_point(n, seed, 5000 + i, 0.9);
            const auto prod = contract(bergman_metric(z), bergman_metric_inverse(z));
            for (std::size_t a2 = 0; a2 < prod.dim(); ++a2)
                for (std::size_t b2 = 0; b2 < prod.dim(); ++b2)
                    worst_metric = std::max(
                        worst_metric,
                        std::abs(prod.at(a2, b2) - (a2 == b2 ? 1.0 : 0.0)));
            if (!bergman_metric(z).is_positive_definite()) pd_failures += 1.0;
        }
        add(make_report("ballcore.metric_inverse", worst_metric, 0.0, 1e-10));
        add(make_report("ballcore.metric_positive_definite", pd_failures, 0.0, 0.0));

        double worst_sym = 0.0, worst_tri = 0.0, worst_mob = 0.0;
        for (int i = 0; i < 200; ++i) {
            const CVector a = random_interior_point(n, seed, 7000 + 3 * i, 0.8);
            const CVector z = random_interior_point(n, seed, 7001 + 3 * i, 0.8);
            const CVector w = random_interior_point(n, seed, 7002 + 3 * i, 0.8);
            const double dzw = hyperbolic_distance(z, w);
            worst_sym = std::max(worst_sym,
                                 std::abs(dzw - hyperbolic_distance(w, z)));
            worst_tri = std::max(worst_tri, dzw - hyperbolic_distance(z, a) -
                                                hyperbolic_distance(a, w));
            worst_mob = std::max(
                worst_mob,
                std::abs(dzw - hyperbolic_distance(mobius(a, z), mobius(a, w))));
        }
        add(make_report("ballcore.distance_symmetry", worst_sym, 0.0, 1e-10));
        add(make_report("ballcore.distance_triangle", worst_tri, 0.0, 1e-9));
        add(make_report("ballcore.distance_mobius_invariance", worst_mob, 0.0, 1e-9));
    }

    // ---- quadrature ---------------------------------------------------
    // n = 1 rules are single circles, so a handful of nodes cannot resolve
    // the mobius-composed integrands; floor the level there.  Past n = 3 the
    // affordable levels are capped instead and tolerances loosen.
    const int field_level =
        high_dim ? std::min(config.quad_level, normalization_rule_level(n))
                 : (n == 1 ? std::max(config.quad_level, 128)
                           : config.quad_level);
    const auto rule =
        std::make_shared<const QuadratureRule>(product_rule(n, field_level));
    const auto mc = std::make_shared<const QuadratureRule>(
        mc_rule(n, config.mc_samples, seed));
    out.integrand_evaluations += rule->nodes.size() + mc->nodes.size();
    {
        double wsum = 0.0;
        for (double w : rule->weights) wsum += w;
        add(make_report("quadrature.product_weight_sum",
                        std::abs(wsum - rule->sigma()) / rule->sigma(), 0.0,
                        1e-10));
        const auto mc2 = mc_rule(n, config.mc_samples, seed);
        bool identical = true;
        for (std::size_t k = 0; k < mc->nodes.size() && identical; ++k)
            for (int j = 0; j < n; ++j)
                if (mc->nodes[k][j] != mc2.nodes[k][j]) identical = false;
        add(make_report("quadrature.mc_determinism", identical ? 0.0 : 1.0, 0.0,
                        0.0));

        double worst_cap = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double c = 0.02 + 0.96 * counter_uniform(seed, 0xCA90 + i);
            worst_cap = std::max(worst_cap,
                                 std::abs(cap_measure(n, cap_alpha(n, c)) - c));
        }
        add(make_report("quadrature.cap_roundtrip", worst_cap, 0.0, 1e-10));

        // Rotation invariance under a coordinate phase rotation.
        const auto f = [](const CVector& w) {
            return std::exp(hermitian_inner(w, w).real()) *
                   std::cos(w[0].real() + 2.0 * w[0].imag());
        };
        const auto frot = [&f](const CVector& w) {
            CVector v = w;
            v[0] *= std::polar(1.0, 0.7);
            return f(v);
        };
        const double i0 = integrate(*rule, f), i1 = integrate(*rule, frot);
        add(make_report("quadrature.rotation_invariance",
                        std::abs(i0 - i1) / std::abs(i0), 0.0, smooth_tol));
    }

    // ---- poisson ------------------------------------------------------
    {
        double worst_norm = 0.0;
        const auto norm_rule = product_rule(n, normalization_rule_level(n));
        out.integrand_evaluations += norm_rule.nodes.size();
        for (int i = 0; i < 10; ++i) {
            const CVector z =
                random_interior_point(n, seed, 0xA000 + i, high_dim ? 0.5 : 0.7);
            const double val = integrate(
                norm_rule, [&](const CVector& w) { return ps_kernel(z, w); });
            worst_norm = std::max(worst_norm, std::abs(val - 1.0));
        }
        add(make_report("poisson.kernel_normalization", worst_norm, 0.0,
                        high_dim ? 1e-2 : 1e-8));

        // Analytic kernel gradient vs finite differences of poisson_eval.
        HarmonicField field = make_field(random_smooth_boundary(n, seed, 1), rule);
        double worst_grad = 0.0, worst_max = 0.0;
        for (int i = 0; i < 10; ++i) {
            const CVector z = random_interior_point(n, seed, 0xB000 + i, 0.7);
            const auto grad = poisson_gradient(field, z);
            const auto xs = z.reals();
            double gnorm = 0.0;
            for (double g : grad) gnorm += g * g;
            gnorm = std::sqrt(gnorm);
            for (std::size_t a2 = 0; a2 < xs.size(); ++a2) {
                auto yp = xs, ym = xs;
                yp[a2] += field.fd_step;
                ym[a2] -= field.fd_step;
                const double fd = (poisson_eval(field, CVector::from_reals(yp)) -
                                   poisson_eval(field, CVector::from_reals(ym))) /
                                  (2.0 * field.fd_step);
                worst_grad =
                    std::max(worst_grad, std::abs(grad[a2] - fd) / (gnorm + 1e-12));
            }
            worst_max = std::max(worst_max, std::abs(poisson_eval(field, z)) -
                                                field.boundary.sup_bound);
        }
        add(make_report("poisson.gradient_fd_consistency", worst_grad, 0.0, 1e-6));
        add(make_report("poisson.maximum_principle", worst_max, 0.0, smooth_tol));

        // Mobius covariance: h(a) is the boundary mean of the pulled-back data.
        const CVector a = random_interior_point(n, seed, 0xC001, 0.5);
        const double left = poisson_eval(field, a);
        const double right = integrate(*rule, [&](const CVector& eta) {
            return field.boundary.eval(mobius(a, eta));
        }) / rule->sigma();
        add(make_report("poisson.mobius_covariance", std::abs(left - right), 0.0,
                        smooth_tol));

        // Boundary-jacobian change of variables on a smooth integrand.
        const double direct = integrate(*rule, field.boundary.eval);
        const double transformed = integrate(*rule, [&](const CVector& eta) {
            return field.boundary.eval(mobius(a, eta)) * boundary_jacobian(a, eta);
        });
        add(make_report("poisson.jacobian_change_of_variables",
                        std::abs(direct - transformed), 0.0, smooth_tol));

        const CVector z0 = random_interior_point(n, seed, 0xC777, 0.6);
        const double lap = invariant_laplacian_fd(field, z0, 1e-3);
        add(make_report("poisson.invariant_harmonicity", std::abs(lap), 0.0,
                        (high_dim ? 5e-2 : 1e-3) * field.boundary.sup_bound));
    }

    // ---- sharpness ----------------------------------------------------
    {
        double worst13 = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const CVector z = random_interior_point(n, seed, 0xD000 + 2 * i, 0.999);
            const CVector l = random_direction(n, seed, 0xD001 + 2 * i);
            const double v2 = v_vector(z, l).norm_sq();
            const double expect =
                1.0 - z.norm_sq() + std::norm(hermitian_inner(l, z));
            worst13 = std::max(worst13, std::abs(v2 - expect));
        }
        add(make_report("sharpness.v_norm_identity", worst13, 0.0, 1e-12));

        const auto kinky = std::make_shared<const QuadratureRule>(
            product_rule(n, kink_rule_level(n)));
        out.integrand_evaluations += kinky->nodes.size();
        double worst_ct = 0.0, worst_cq = 0.0;
        for (double r : {0.0, 0.3, 0.6}) {
            auto z = CVector(std::size_t(n));
            z[0] = r;
            std::vector<CVector> dirs = {CVector::basis(n, 0)};
            if (n > 1) dirs.push_back(CVector::basis(n, 1));
            dirs.push_back(random_direction(n, seed, 0xE000));
            for (const auto& l : dirs) {
                const double cc = c_closed(z, l);
                worst_ct = std::max(
                    worst_ct, std::abs(cc - c_transformed(z, l, *kinky)) / cc);
                worst_cq = std::max(
                    worst_cq, std::abs(cc - c_quadrature(z, l, *kinky)) / cc);
            }
        }
        add(make_report("sharpness.c_transformed_agreement", worst_ct, 0.0,
                        high_dim ? 5e-2 : 1e-4));
        add(make_report("sharpness.c_quadrature_agreement", worst_cq, 0.0,
                        high_dim ? 5e-2 : 1e-3));

        double worst_ub = 0.0;
        for (int i = 0; i < 500; ++i) {
            const CVector z = random_interior_point(n, seed, 0xF000 + 2 * i, 0.95);
            const CVector l = random_direction(n, seed, 0xF001 + 2 * i);
            worst_ub = std::max(worst_ub, c_closed(z, l) * (1.0 - z.norm_sq()) -
                                              sharp_constant(n));
        }
        add(make_report("sharpness.directional_upper_bound", worst_ub, 0.0, 1e-12));

        // Khavinson argmax alignment.
        const CVector zk = random_interior_point(n, seed, 0xF777, 0.8);
        const auto profile = khavinson_argmax(zk, 200);
        const double align = std::abs(hermitian_inner(
            profile.argmax_direction, Complex(1.0 / zk.norm()) * zk));
        add(make_report("sharpness.khavinson_alignment", 1.0 - align, 0.0, 1e-9));

        // Gradient-bound domination on random smooth fields.
        double worst_dom = 0.0;
        for (int i = 0; i < 20; ++i) {
            HarmonicField f = make_field(random_smooth_boundary(n, seed, 100 + i), rule);
            for (int k = 0; k < 5; ++k) {
                const CVector z =
                    random_interior_point(n, seed, 0x11000 + 100 * i + k, 0.8);
                const auto rep = gradient_bound_check(f, z, 1e-4);
                worst_dom = std::max(worst_dom, -rep.slack);
            }
        }
        add(make_report("sharpness.gradient_domination", worst_dom, 0.0,
                        high_dim ? 1e-2 : 1e-4));

        // Sharpness witness.
        auto zw = CVector(std::size_t(n));
        zw[0] = 0.5;
        const CVector lw = CVector::basis(n, 0);
        const auto witness_rule = std::make_shared<const QuadratureRule>(
            product_rule(n, std::max(config.quad_level, kink_rule_level(n))));
        out.integrand_evaluations += witness_rule->nodes.size();
        const auto rep = gradient_bound_check(
            extremal_field(zw, lw, witness_rule), zw, kSharpnessBudget);
        const double witness_fraction = high_dim ? 0.9 : 0.99;
        add(make_report("sharpness.extremal_witness",
                        witness_fraction * rep.rhs - rep.lhs, 0.0, 0.0,
                        {{"attained", format_full(rep.lhs)},
                         {"bound", format_full(rep.rhs)}}));
    }

    // ---- bounds -------------------------------------------------------
    {
        double worst_lower = 0.0, worst_upper = 0.0, worst_lip = 0.0;
        double max_ratio = 0.0;
        for (int i = 0; i < 20; ++i) {
            HarmonicField f = make_field(random_smooth_boundary(n, seed, 300 + i), rule);
            for (int k = 0; k < 5; ++k) {
                const CVector z =
                    random_interior_point(n, seed, 0x13000 + 100 * i + k, 0.8);
                const CVector w =
                    random_interior_point(n, seed, 0x14000 + 100 * i + k, 0.8);
                const auto rep = bergman_bound_check(f, z, 1e-4);
                worst_lower = std::max(
                    worst_lower, -std::stod(rep.metadata.at("lower_slack")));
                worst_upper = std::max(worst_upper, -rep.slack);
                max_ratio =
                    std::max(max_ratio, std::stod(rep.metadata.at("ratio_b_over_c")));
                const auto lip = lipschitz_check(f, z, w, 1e-6);
                worst_lip = std::max(worst_lip, -lip.slack);
            }
        }
        add(make_report("bergman.lower_inequality", worst_lower, 0.0, 1e-10));
        add(make_report("bergman.upper_inequality", worst_upper, 0.0,
                        high_dim ? 1e-2 : 1e-4));
        add(make_report("bergman.lipschitz", worst_lip, 0.0,
                        high_dim ? 1e-2 : 1e-6));
        out.diagnostics["bergman_max_ratio_b_over_c"] = max_ratio;
        out.diagnostics["bergman_ratio_note"] =
            "under the pinned Bergman norm the observed supremum of b/c stays "
            "near 1/2; only the inequality is asserted";

        double worst_op = 0.0, worst_m1 = 0.0;
        for (int m = 1; m <= 3; ++m) {
            VectorField H;
            for (int k = 0; k < m; ++k) {
                auto b = random_smooth_boundary(n, seed, 400 + 10 * m + k);
                const double scale = 1.0 / std::sqrt(double(m));
                auto inner = b.eval;
                b.eval = [inner, scale](const CVector& w) {
                    return scale * inner(w);
                };
                b.sup_bound = scale;
                H.components.push_back(make_field(std::move(b), rule));
            }
            const CVector z = random_interior_point(n, seed, 0x15000 + m, 0.7);
            const auto rep = operator_norm_check(H, z, 1e-4);
            worst_op = std::max(worst_op, -rep.slack);
            if (m == 1) {
                const auto grad = poisson_gradient(H.components[0], z);
                double g2 = 0.0;
                for (double g : grad) g2 += g * g;
                worst_m1 = std::abs(rep.lhs - std::sqrt(g2));
            }
        }
        add(make_report("vectorfield.operator_norm", worst_op, 0.0,
                        high_dim ? 1e-2 : 1e-4));
        add(make_report("vectorfield.m1_reduction", worst_m1, 0.0, 1e-12));
    }

    // ---- burgeth ------------------------------------------------------
    {
        const auto env_rule = std::make_shared<const QuadratureRule>(
            product_rule(n, envelope_rule_level(n)));
        out.integrand_evaluations += env_rule->nodes.size();
        double worst_cross = 0.0, worst_anchor = 0.0;
        for (double c : {0.25, 0.5, 0.75}) {
            for (double r : {0.0, 0.3, 0.6}) {
                const double env = m_envelope(n, c, r, *env_rule);
                const double other =
                    (n == 1) ? m_closed_n1(c, r) : m_double_integral(n, c, r);
                worst_cross = std::max(worst_cross, std::abs(env - other));
            }
            worst_anchor = std::max(
                worst_anchor,
                std::abs(m_envelope(n, c, 0.0, *env_rule) - (2 * c - 1)));
        }
        add(make_report("burgeth.cross_method", worst_cross, 0.0, nonsmooth_tol));
        add(make_report("burgeth.anchor_r0", worst_anchor, 0.0, nonsmooth_tol));

        double worst_dom = 0.0;
        for (int i = 0; i < 20; ++i) {
            HarmonicField f =
                make_field(random_smooth_boundary(n, seed, 500 + i), env_rule);
            const CVector z = random_interior_point(n, seed, 0x16000 + i, 0.7);
            const auto rep = schwarz_check(f, z, nonsmooth_tol);
            worst_dom = std::max(worst_dom, -rep.slack);
        }
        add(make_report("burgeth.envelope_domination", worst_dom, 0.0,
                        nonsmooth_tol));
    }

    out.diagnostics["involution_base_point"] =
        "phi_a(0) = a is implemented; the formula and the involution force it";
    out.diagnostics["distance_normalization"] =
        "hyperbolic distance pinned to sqrt(n+1)*atanh(||phi_z(w)||)";
    return out;
}

} // namespace ballharm
