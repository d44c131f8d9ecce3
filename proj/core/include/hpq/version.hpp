#pragma once

namespace hpq {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hpq
