#pragma once

namespace flashhelp {
inline constexpr const char* kVersion = "0.1.0";
}
