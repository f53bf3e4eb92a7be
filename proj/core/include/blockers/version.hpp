#pragma once

namespace blockers {

inline constexpr const char* kVersion = "0.1.0";

} // namespace blockers
