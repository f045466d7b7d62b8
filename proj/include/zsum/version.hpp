#pragma once

namespace zsum {

inline constexpr const char* kVersion = "0.1.0";

}
