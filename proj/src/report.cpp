#include "hcstab/report.hpp"

#include <cstdio>

namespace hcstab {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

void append_common(std::string& out, const StabilityReport& rep) {
    out += "  \"n\": " + std::to_string(rep.n) + ",\n";
    out += "  \"method\": " + quoted(to_string(rep.method)) + ",\n";
    out += "  \"loss_x\": " + num(rep.loss_x) + ",\n";
    out += "  \"norm_constant\": " + std::to_string(rep.norm_const) + ",\n";
    out += "  \"delta\": " + num(rep.delta) + ",\n";
    out += "  \"epsilon\": " + num(rep.epsilon) + ",\n";
    out += "  \"epsilon_relative\": " + num(rep.epsilon_relative) + ",\n";
    out += "  \"rounds\": " + std::to_string(rep.rounds) + ",\n";
    out += "  \"cuts\": {\"triangle\": " + std::to_string(rep.cuts.triangle) +
           ", \"spreading\": " + std::to_string(rep.cuts.spreading) + "},\n";
    out += "  \"lp_iterations\": " + std::to_string(rep.lp_iterations) + ",\n";
    out += "  \"status\": " + quoted(rep.status) + ",\n";
    out += "  \"warnings\": [";
    for (std::size_t i = 0; i < rep.warnings.size(); ++i) {
        if (i) out += ", ";
        out += quoted(rep.warnings[i]);
    }
    out += "]";
}

void append_ystar(std::string& out, const StabilityReport& rep) {
    out += ",\n  \"y_star\": {\"order\": \"pair-major level-minor\", \"values\": [";
    for (std::size_t k = 0; k < rep.y_star.y.size(); ++k) {
        if (k) out += ", ";
        out += num(rep.y_star.y[k]);
    }
    out += "]}";
}

}  // namespace

std::string render_report(const StabilityReport& rep, bool emit_ystar) {
    std::string out = "{\n";
    append_common(out, rep);
    if (emit_ystar) append_ystar(out, rep);
    out += "\n}\n";
    return out;
}

std::string render_oracle_report(const StabilityReport& rep, const CertificateCheck& check,
                                 double epsilon_checked, bool emit_ystar) {
    std::string out = "{\n";
    append_common(out, rep);
    out += ",\n  \"oracle\": {\"delta_int\": " + std::to_string(check.delta_int) +
           ", \"max_dist\": " + std::to_string(check.max_dist) +
           ", \"feasible_count\": " + std::to_string(check.feasible_count) +
           ", \"epsilon_checked\": " + num(epsilon_checked) +
           ", \"verdict\": " + quoted(check.valid ? "valid" : "invalid") + "}";
    if (emit_ystar) append_ystar(out, rep);
    out += "\n}\n";
    return out;
}

}  // namespace hcstab
