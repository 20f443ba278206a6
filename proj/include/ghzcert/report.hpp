#pragma once

#include "ghzcert/lhv.hpp"

#include <string>
#include <string_view>

namespace ghzcert {

/// Locale-independent "%.15g" (at least 12 significant digits).
std::string format_double(double value);

/// Certificate rendered for humans, or as stable one-key-per-line
/// "key=value" records when machine is set. States certified nonlocal carry
/// the complete-separability corollary flag; otherwise the flag reads
/// "unknown" (this level of the argument is silent about separability).
std::string format_certificate(const CertificateReport& report, std::string_view input_id,
                               bool machine);

} // namespace ghzcert
