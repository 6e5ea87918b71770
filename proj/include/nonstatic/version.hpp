#pragma once

namespace nonstatic {

inline constexpr const char* version = "1.0.0";

}  // namespace nonstatic
