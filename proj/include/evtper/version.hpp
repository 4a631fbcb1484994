#pragma once

namespace evtper {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace evtper
