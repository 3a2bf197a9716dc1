#pragma once

// Littlewood-Richardson coefficients by exhaustive enumeration of LR skew
// tableaux: semistandard fillings of lambda/mu with content nu whose reverse
// reading word (right to left along rows, top to bottom) is a lattice word.

#include <vector>

#include "polyfun/error.hpp"
#include "polyfun/partition.hpp"

namespace polyfun {

inline long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  check_partition(lambda);
  check_partition(mu);
  check_partition(nu);
  if (weight(lambda) != weight(mu) + weight(nu)) return 0;
  if (!contains(lambda, mu)) return 0;
  if (nu.empty()) return 1;  // lambda == mu at this point

  const int rows = static_cast<int>(lambda.size());
  const int vals = static_cast<int>(nu.size());
  // Cells in reverse reading order: top row first, right to left.
  struct Cell { int r, c; };
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r) {
    int lo = (r < static_cast<int>(mu.size())) ? mu[r] : 0;
    for (int c = lambda[r] - 1; c >= lo; --c) cells.push_back({r, c});
  }

  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(lambda[r], 0);  // 0 = empty
  std::vector<int> count(vals + 1, 0);

  long long total = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[k];
    for (int v = 1; v <= vals; ++v) {
      if (count[v] >= nu[v - 1]) continue;
      if (v >= 2 && count[v] + 1 > count[v - 1]) continue;  // lattice word
      // Row weakly increasing: right neighbour (already filled) must be >= v.
      if (c + 1 < lambda[r] && fill[r][c + 1] != 0 && fill[r][c + 1] < v) continue;
      // Column strictly increasing: the box above (filled earlier if it is in
      // the skew shape) must be < v.
      if (r > 0 && c < lambda[r - 1]) {
        int muAbove = (r - 1 < static_cast<int>(mu.size())) ? mu[r - 1] : 0;
        if (c >= muAbove && fill[r - 1][c] >= v) continue;
      }
      fill[r][c] = v;
      ++count[v];
      self(self, k + 1);
      --count[v];
      fill[r][c] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace polyfun
