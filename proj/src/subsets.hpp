#pragma once

#include <cstddef>
#include <vector>

namespace skillmc::detail {

// Visits every nonempty subset of {0, ..., n-1} as a sorted index list, in
// increasing cardinality and lexicographic order within a cardinality.
// Stops early when fn returns false; returns false iff it stopped early.
template <class Fn>
bool for_each_nonempty_subset(std::size_t n, Fn&& fn) {
  std::vector<std::size_t> pick;
  for (std::size_t k = 1; k <= n; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (!fn(static_cast<const std::vector<std::size_t>&>(pick))) return false;
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace skillmc::detail
