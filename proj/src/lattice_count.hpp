#pragma once

#include <cstdint>
#include <vector>

namespace reflex::detail {

using i128 = __int128;

/// a·y + b·z ≤ c
struct Line {
  std::int64_t a, b, c;
};

/// Σ_{i=0}^{n-1} ⌊(a·i + b) / m⌋ for n ≥ 0, m > 0.
i128 floor_sum(i128 n, i128 m, i128 a, i128 b);

/// Number of integer points (y, z) in the box [ylo, yhi] × [zlo, zhi] that
/// satisfy every line. Runs between crossing abscissae are summed in closed form.
i128 count_polygon(const std::vector<Line>& lines, std::int64_t ylo, std::int64_t yhi, std::int64_t zlo,
                   std::int64_t zhi);

}  // namespace reflex::detail
