#pragma once

#include <string>

#include "hcstab/oracle.hpp"
#include "hcstab/sublevel.hpp"

namespace hcstab {

// JSON renderings with a fixed key order and %.12g number formatting, so
// identical inputs produce byte-identical reports. No timestamps or other
// run-varying fields.
std::string render_report(const StabilityReport& rep, bool emit_ystar = false);

// Certification report extended with the enumeration oracle's findings;
// epsilon_checked is the radius the verdict was evaluated against (it
// differs from rep.epsilon only under the test override hook).
std::string render_oracle_report(const StabilityReport& rep, const CertificateCheck& check,
                                 double epsilon_checked, bool emit_ystar = false);

}  // namespace hcstab
