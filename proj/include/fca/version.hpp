#pragma once

namespace fca {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fca
