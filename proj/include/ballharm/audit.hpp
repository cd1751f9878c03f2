#pragma once

#include "ballharm/report.hpp"

#include "ballharm/poisson.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ballharm {

struct RunConfig {
    int dim = 2;
    int quad_level = 12;
    int mc_samples = 100000;
    std::uint64_t seed = 1;
    double tol_smooth = 1e-6;
    double tol_nonsmooth = 1e-3;
    std::vector<double> radii = {0.0, 0.3, 0.6};
    std::string format = "json"; // csv|json
    std::string out;             // empty = stdout

    void validate() const; // throws std::invalid_argument
};

// Relative budget for sharpness witnesses (discontinuous extremal data).
constexpr double kSharpnessBudget = 1e-2;

// Empirically sized product-rule levels per dimension: strong enough for the
// kinked |grad P_z . l| integrands, the 1e-8 kernel normalization at
// ||z|| <= 0.7, and the ~1e-3 cap-indicator envelope respectively.  Past
// n = 3 the affordable levels are coarse and callers loosen tolerances.
int kink_rule_level(int n);
int normalization_rule_level(int n);
int envelope_rule_level(int n);

// Smooth bounded boundary data cos(s Re<w,u> + p), |f| <= 1, deterministic in
// (seed, index).
BoundaryFunction random_smooth_boundary(int n, std::uint64_t seed,
                                        std::uint64_t index);

// Deterministic interior point with ||z|| <= max_radius.
CVector random_interior_point(int n, std::uint64_t seed, std::uint64_t index,
                              double max_radius);

CVector random_direction(int n, std::uint64_t seed, std::uint64_t index);

struct AuditResult {
    std::vector<VerificationReport> reports;
    nlohmann::json diagnostics;
    std::uint64_t integrand_evaluations = 0;
    bool all_pass() const;
    nlohmann::json to_json(const RunConfig& config) const;
};

// Every asserted invariant suite across the modules; open-question
// diagnostics (Bergman-bound b/c ratio, involution base-point note) are
// reported but never fail the run.
AuditResult run_audit(const RunConfig& config);

} // namespace ballharm
