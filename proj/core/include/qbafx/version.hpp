#pragma once

namespace qbafx {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace qbafx
