#pragma once

#include <cstddef>
#include <vector>

namespace tropmirror::detail {

// Calls visit(indices) for every k-subset of {0..m-1} in lexicographic order.
// visit returns false to stop early.
template <class Visit>
void for_each_subset(std::size_t m, std::size_t k, Visit&& visit) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace tropmirror::detail
