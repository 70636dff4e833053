#pragma once

namespace chroma {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace chroma
