#pragma once

#include <string_view>

#include "hyperlay/graph.hpp"

namespace hyperlay::detail {

ParsedGraph parse_dot(std::string_view text);

}  // namespace hyperlay::detail
