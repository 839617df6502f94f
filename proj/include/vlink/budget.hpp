#pragma once

#include <cstddef>

namespace vlink {

/// Search limits. Both limits are mandatory; `threads` only affects speed,
/// never results.
struct Budget {
  std::size_t max_crossings = 0;
  std::size_t max_expansions = 0;
  unsigned threads = 1;
};

}  // namespace vlink
