#pragma once

namespace sptsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sptsim
