#pragma once

namespace thermoprior {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace thermoprior
