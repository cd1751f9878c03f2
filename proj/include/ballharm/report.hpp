#pragma once

#include <map>
#include <string>

#include <json.hpp>

namespace ballharm {

// One checked inequality or identity.  pass <=> slack >= -tolerance.
struct VerificationReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;
    std::map<std::string, std::string> metadata;
    bool pass = false;

    nlohmann::json to_json() const;
};

// slack = rhs - lhs.
VerificationReport make_report(std::string name, double lhs, double rhs,
                               double tolerance,
                               std::map<std::string, std::string> metadata = {});

// 17-significant-digit decimal, the precision used by every report writer.
std::string format_full(double x);

} // namespace ballharm
