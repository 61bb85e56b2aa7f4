#pragma once

namespace cyclo {

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace cyclo
