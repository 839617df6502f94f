#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vlink::cli {

enum Exit : int {
  Equivalent = 0,
  Distinct = 1,
  Unknown = 2,
  Usage = 64,
  BadData = 65,
  IoError = 74,
};

/// Runs one command. `args` excludes the program name. `env_max_expansions`
/// is the value of VL_MAX_EXPANSIONS, if set; `in` serves `table -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_max_expansions = std::nullopt);

}  // namespace vlink::cli
