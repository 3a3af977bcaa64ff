#pragma once

namespace umq {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace umq
