#pragma once

namespace lattice {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace lattice
