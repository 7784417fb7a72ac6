#pragma once

#include <cstddef>

namespace welldom {

/// Limits for the exhaustive enumerators. Exceeding any of them raises
/// ResourceError.
struct EnumerationBudget {
  int independent_max_order = 24;
  int dominating_max_order = 20;
  std::size_t max_sets = 1'000'000;

  /// Defaults, with both order limits replaced by WELLDOM_BUDGET when that
  /// variable holds a positive integer.
  static EnumerationBudget from_environment();
  /// Sets both order limits.
  EnumerationBudget with_order_limit(int n) const;
};

}  // namespace welldom
