#pragma once

#include <string_view>

namespace lcv {

std::string_view tool_version();

}  // namespace lcv
