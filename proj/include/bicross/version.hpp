#pragma once

namespace bicross {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace bicross
