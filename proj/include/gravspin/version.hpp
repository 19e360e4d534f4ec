#pragma once

namespace gravspin {

inline constexpr const char* kVersion = "0.1.0";

} // namespace gravspin
