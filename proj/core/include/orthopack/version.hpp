#pragma once

namespace orthopack {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orthopack
