#pragma once

namespace wordsym {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wordsym
