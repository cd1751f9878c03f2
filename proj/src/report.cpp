#include "ballharm/report.hpp"

#include <cstdio>

namespace ballharm {

std::string format_full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

VerificationReport make_report(std::string name, double lhs, double rhs,
                               double tolerance,
                               std::map<std::string, std::string> metadata) {
    VerificationReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.tolerance = tolerance;
    r.metadata = std::move(metadata);
    r.pass = r.slack >= -tolerance;
    return r;
}

nlohmann::json VerificationReport::to_json() const {
    return nlohmann::json{{"name", name},
                          {"lhs", lhs},
                          {"rhs", rhs},
                          {"slack", slack},
                          {"tolerance", tolerance},
                          {"metadata", metadata},
                          {"pass", pass}};
}

} // namespace ballharm
