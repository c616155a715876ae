#pragma once

namespace rindler_dicke {
inline constexpr const char* kVersion = "0.1.0";
}
