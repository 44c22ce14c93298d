// Ordered exhaustive search over integer boxes, shared by the oracle
// and the class test. Not installed.
#pragma once

#include <cstdint>
#include <optional>

#include "kgraph/integer.hpp"

namespace kgraph::detail {

enum class BoxGoal {
  NonnegativeNonzero,  // M z >= 0 and M z != 0
  Equals,              // M z == target
};

/// First z in [-bound, bound]^cols meeting the goal, in lexicographic order
/// with z[0] most significant and each coordinate running 0, -1, 1, -2, 2. Subtrees are pruned by per-row reach and
/// failed (depth, partial sum) states are memoized, which leaves the
/// lexicographic answer unchanged.
std::optional<IntVector> box_search(const IntMatrix& m, std::int64_t bound, BoxGoal goal,
                                    const IntVector& target = {});

}  // namespace kgraph::detail
