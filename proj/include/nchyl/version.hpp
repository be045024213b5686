#pragma once

namespace nchyl {

inline constexpr const char* kVersion = "0.1.0";

} // namespace nchyl
