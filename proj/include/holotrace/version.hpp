#pragma once

namespace holotrace {
inline constexpr const char* version = "0.1.0";
}
