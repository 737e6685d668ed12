#include "rstsum/version.hpp"

namespace rstsum {

std::string_view version() noexcept { return RSTSUM_VERSION; }

}  // namespace rstsum
