#pragma once

namespace ghzcert {

inline constexpr const char* version = "1.0.0";

} // namespace ghzcert
