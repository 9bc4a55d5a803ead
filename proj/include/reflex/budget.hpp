#pragma once

#include <cstdint>

namespace reflex {

/// Upper bound on enumeration work for a single lattice count. A count costs
/// one unit per two-dimensional slab of the integer bounding box (a single unit
/// in dimension at most 2); listing points costs one unit per point.
struct Budget {
  static constexpr std::uint64_t kDefaultWork = 10'000'000;
  std::uint64_t work = kDefaultWork;

  /// Default budget, overridden by the REFLEX_BUDGET environment variable.
  static Budget from_env();
};

}  // namespace reflex
