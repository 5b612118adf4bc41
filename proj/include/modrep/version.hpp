#pragma once

namespace modrep {

inline constexpr const char* kVersion = "0.1.0";

}
