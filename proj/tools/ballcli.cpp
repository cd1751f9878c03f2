// Command-line front end: verification suites and plot-ready tables for the
// invariant-harmonic sharp gradient estimate on the complex unit ball.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage/config error.

#include "ballharm/audit.hpp"
#include "ballharm/bounds.hpp"
#include "ballharm/burgeth.hpp"
#include "ballharm/sharpness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace ballharm;

struct CliOptions {
    RunConfig config;
    double c = 0.5;
    std::vector<double> z_reals;
    int grid = 200;
    std::string config_path;
};

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--config", opt.config_path,
                    "Config file with key = value lines; flags override it");
    cmd->add_option("--dim", opt.config.dim, "Complex dimension n")
        ->check(CLI::Range(1, 6));
    cmd->add_option("--level", opt.config.quad_level,
                    "Product-rule level (level^(2n-1) nodes)")
        ->check(CLI::Range(2, 1 << 20));
    cmd->add_option("--mc", opt.config.mc_samples, "Monte Carlo sample count")
        ->check(CLI::Range(1000, 1 << 30));
    cmd->add_option("--seed", opt.config.seed, "RNG seed");
    cmd->add_option("--radii", opt.config.radii,
                    "Radius grid r1,r2,... in [0,1)")
        ->delimiter(',');
    cmd->add_option("--tol-smooth", opt.config.tol_smooth,
                    "Budget for smooth-integrand checks");
    cmd->add_option("--tol-nonsmooth", opt.config.tol_nonsmooth,
                    "Budget for discontinuous-integrand checks");
    cmd->add_option("--format", opt.config.format, "Output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.config.out, "Output path (default stdout)");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& value) {
    std::vector<double> out;
    std::istringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(trim(item)));
    return out;
}

// Precedence: flags override the file, the file overrides defaults.  Keys
// are the long option names without dashes.
void apply_config_file(const CLI::App& sub, CliOptions& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in)
        throw std::invalid_argument("cannot read config file: " +
                                    opt.config_path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " +
                                        std::to_string(lineno) +
                                        " is not key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (const auto* option = sub.get_option_no_throw("--" + key);
            option && option->count() > 0)
            continue;
        if (key == "dim") opt.config.dim = std::stoi(value);
        else if (key == "level") opt.config.quad_level = std::stoi(value);
        else if (key == "mc") opt.config.mc_samples = std::stoi(value);
        else if (key == "seed") opt.config.seed = std::stoull(value);
        else if (key == "radii") opt.config.radii = parse_list(value);
        else if (key == "tol-smooth") opt.config.tol_smooth = std::stod(value);
        else if (key == "tol-nonsmooth")
            opt.config.tol_nonsmooth = std::stod(value);
        else if (key == "format") opt.config.format = value;
        else if (key == "out") opt.config.out = value;
        else if (key == "c") opt.c = std::stod(value);
        else if (key == "z") opt.z_reals = parse_list(value);
        else if (key == "grid") opt.grid = std::stoi(value);
        else throw std::invalid_argument("unknown config key: " + key);
    }
}

// Reports and tables go to --out (or stdout); notices share stdout only when
// the table goes to a file, otherwise they move to stderr to keep it parseable.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& table() { return file_.is_open() ? file_ : std::cout; }
    std::ostream& notice() { return file_.is_open() ? std::cout : std::cerr; }

private:
    std::ofstream file_;
};

CVector parse_point(const std::vector<double>& reals, int n) {
    if (reals.empty()) {
        auto z = CVector(std::size_t(n));
        z[0] = 0.5;
        return z;
    }
    if (int(reals.size()) != 2 * n)
        throw std::invalid_argument("--z needs " + std::to_string(2 * n) +
                                    " reals for dim " + std::to_string(n));
    return CVector::from_reals(reals);
}

int cmd_verify_constant(const CliOptions& opt) {
    opt.config.validate();
    const int n = opt.config.dim;
    const auto rule = std::make_shared<const QuadratureRule>(product_rule(
        n, std::max(opt.config.quad_level, kink_rule_level(n))));
    const double constant = sharp_constant(n);

    std::vector<VerificationReport> reports;
    for (double r : opt.config.radii) {
        auto z = CVector(std::size_t(n));
        z[0] = r;
        const CVector l = CVector::basis(n, 0);
        HarmonicField field = extremal_field(z, l, rule);
        const auto grad = poisson_gradient(field, z);
        double g2 = 0.0;
        for (double g : grad) g2 += g * g;
        const double estimate = std::sqrt(g2) * (1.0 - r * r);
        const double deviation = std::abs(estimate - constant) / constant;
        reports.push_back(make_report(
            "verify_constant.r=" + format_full(r), deviation, 0.0,
            kSharpnessBudget,
            {{"constant", format_full(constant)},
             {"estimate", format_full(estimate)},
             {"seed", std::to_string(opt.config.seed)}}));
    }

    OutputTarget out(opt.config.out);
    if (opt.config.format == "csv") {
        out.table() << "radius,dim,constant,estimate,rel_deviation,pass\n";
        for (std::size_t i = 0; i < reports.size(); ++i)
            out.table() << format_full(opt.config.radii[i]) << ',' << n << ','
                        << format_full(constant) << ','
                        << reports[i].metadata.at("estimate") << ','
                        << format_full(reports[i].lhs) << ','
                        << (reports[i].pass ? "true" : "false") << "\n";
    } else {
        nlohmann::json j{{"dim", n},
                         {"constant", constant},
                         {"seed", opt.config.seed},
                         {"reports", nlohmann::json::array()}};
        for (const auto& rep : reports) j["reports"].push_back(rep.to_json());
        out.table() << j.dump(2) << "\n";
    }
    for (const auto& rep : reports)
        if (!rep.pass) return 1;
    return 0;
}

int cmd_profile(const CliOptions& opt) {
    opt.config.validate();
    if (opt.grid < 1) throw std::invalid_argument("--grid must be >= 1");
    const int n = opt.config.dim;
    const CVector z = parse_point(opt.z_reals, n);
    require_interior(z);
    const auto rule = product_rule(n, opt.config.quad_level);
    const auto profile = khavinson_argmax(z, opt.grid, &rule);

    OutputTarget out(opt.config.out);
    write_profile_csv(out.table(), profile);
    if (profile.degenerate) {
        out.notice() << "z = 0: all directions tie, profile is uniform\n";
    } else {
        const CVector zhat = Complex(1.0 / z.norm()) * z;
        const double align =
            std::abs(hermitian_inner(profile.argmax_direction, zhat));
        out.notice() << "argmax direction:";
        for (double x : profile.argmax_direction.reals())
            out.notice() << ' ' << format_full(x);
        out.notice() << "\nalignment |<argmax,zhat>| = " << format_full(align)
                     << "\n";
    }
    return 0;
}

int cmd_burgeth(const CliOptions& opt) {
    opt.config.validate();
    if (!(opt.c > 0.0 && opt.c < 1.0))
        throw std::invalid_argument("--c must lie in (0,1)");
    const int n = opt.config.dim;
    const auto rule = product_rule(
        n, std::max(opt.config.quad_level, envelope_rule_level(n)));

    OutputTarget out(opt.config.out);
    out.table() << "r,M,method,n,c\n";
    double worst = 0.0;
    for (double r : opt.config.radii) {
        const double env = m_envelope(n, opt.c, r, rule);
        const double other = (n == 1) ? m_closed_n1(opt.c, r)
                                      : m_double_integral(n, opt.c, r);
        worst = std::max(worst, std::abs(env - other));
        const char* other_name =
            (n == 1) ? method_name(BurgethMethod::ClosedFormN1)
                     : method_name(BurgethMethod::DoubleIntegral);
        out.table() << format_full(r) << ',' << format_full(env) << ','
                    << method_name(BurgethMethod::IndicatorQuadrature) << ','
                    << n << ',' << format_full(opt.c) << "\n";
        out.table() << format_full(r) << ',' << format_full(other) << ','
                    << other_name << ',' << n << ',' << format_full(opt.c)
                    << "\n";
    }
    out.notice() << "cross-method max deviation = " << format_full(worst)
                 << "\n";
    return 0;
}

int cmd_audit(const CliOptions& opt) {
    opt.config.validate();
    const AuditResult result = run_audit(opt.config);
    OutputTarget out(opt.config.out);
    if (opt.config.format == "csv") {
        out.table() << "name,lhs,rhs,slack,tolerance,pass,seed\n";
        for (const auto& rep : result.reports)
            out.table() << rep.name << ',' << format_full(rep.lhs) << ','
                        << format_full(rep.rhs) << ',' << format_full(rep.slack)
                        << ',' << format_full(rep.tolerance) << ','
                        << (rep.pass ? "true" : "false") << ','
                        << opt.config.seed << "\n";
    } else {
        out.table() << result.to_json(opt.config).dump(2) << "\n";
    }
    return result.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp gradient estimates for invariant harmonic functions "
                 "on the complex unit ball"};
    app.require_subcommand(1);

    CliOptions opt;
    auto* verify = app.add_subcommand(
        "verify-constant",
        "Check that the extremal field attains the sharp constant on the "
        "radius grid");
    add_common_options(verify, opt);

    auto* profile = app.add_subcommand(
        "profile", "Tabulate the directional functional C(z,l) over a "
                   "direction grid and report its argmax");
    add_common_options(profile, opt);
    profile->add_option("--z", opt.z_reals,
                        "Interior point as re1,im1,... (default 0.5 e_1)")
        ->delimiter(',');
    profile->add_option("--grid", opt.grid, "Number of sampled directions");

    auto* burgeth = app.add_subcommand(
        "burgeth", "Tabulate the envelope M_c^n over the radius grid by "
                   "independent methods");
    add_common_options(burgeth, opt);
    burgeth->add_option("--c", opt.c, "Normalized cap measure in (0,1)");

    auto* audit = app.add_subcommand(
        "audit", "Run every invariant suite and aggregate the reports");
    add_common_options(audit, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            apply_config_file(*verify, opt);
            return cmd_verify_constant(opt);
        }
        if (profile->parsed()) {
            apply_config_file(*profile, opt);
            return cmd_profile(opt);
        }
        if (burgeth->parsed()) {
            apply_config_file(*burgeth, opt);
            return cmd_burgeth(opt);
        }
        apply_config_file(*audit, opt);
        return cmd_audit(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
