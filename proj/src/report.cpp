#include "ghzcert/report.hpp"

#include "ghzcert/version.hpp"

#include <cstdio>
#include <sstream>

namespace ghzcert {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    return buf;
}

std::string format_certificate(const CertificateReport& report, std::string_view input_id,
                               bool machine) {
    const bool nonlocal = report.verdict != Verdict::LocallyExplainableAtThisLevel;
    std::ostringstream out;
    if (machine) {
        out << "tool=ghzcert\n"
            << "version=" << version << "\n"
            << "input=" << input_id << "\n"
            << "epsilon=" << format_double(report.epsilon) << "\n"
            << "witness=" << format_double(report.witness_value) << "\n";
        for (int k = 0; k < 4; ++k)
            out << "q" << k + 1 << "=" << format_double(report.quadruple[k]) << "\n";
        out << "lp_feasible=" << (report.lp_feasible ? "true" : "false") << "\n"
            << "verdict=" << to_string(report.verdict) << "\n"
            << "not_completely_separable=" << (nonlocal ? "true" : "unknown") << "\n";
    } else {
        static constexpr const char* event_names[4] = {"XXX=+1", "XYY=-1", "YXY=-1", "YYX=-1"};
        out << "ghzcert " << version << "\n"
            << "input: " << input_id << "\n"
            << "epsilon (trace distance to GHZ): " << format_double(report.epsilon) << "\n"
            << "witness (4*epsilon - 1): " << format_double(report.witness_value) << "\n";
        for (int k = 0; k < 4; ++k)
            out << "q" << k + 1 << " (" << event_names[k]
                << "): " << format_double(report.quadruple[k]) << "\n";
        out << "local deterministic model for the four events: "
            << (report.lp_feasible ? "feasible" : "infeasible") << "\n"
            << "verdict: " << to_string(report.verdict) << "\n";
        if (nonlocal) {
            out << "separability: not completely separable (corollary of nonlocality)\n";
        }
    }
    return out.str();
}

} // namespace ghzcert
