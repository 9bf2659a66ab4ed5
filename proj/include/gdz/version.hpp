#pragma once

namespace gdz {

inline constexpr const char* kVersion = "0.1.0";

} // namespace gdz
