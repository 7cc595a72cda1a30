#pragma once

namespace eigenbound {
inline constexpr const char* kVersion = "0.1.0";
}
