#pragma once

#include <string_view>

namespace rstsum {

std::string_view version() noexcept;

}  // namespace rstsum
