#pragma once

#include <string>
#include <vector>

namespace dag::detail {

/// "op(a, b, c)" split into its name and trimmed arguments.
struct Call {
  std::string op;
  std::vector<std::string> args;
};

Call parse_call(const std::string& text);

}  // namespace dag::detail
