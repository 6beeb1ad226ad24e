#pragma once

namespace liouville {

inline constexpr const char* version = "0.1.0";

} // namespace liouville
