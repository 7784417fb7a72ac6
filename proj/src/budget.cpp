#include "welldom/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace welldom {

EnumerationBudget EnumerationBudget::from_environment() {
  EnumerationBudget budget;
  const char* raw = std::getenv("WELLDOM_BUDGET");
  if (raw == nullptr) return budget;
  std::string_view text(raw);
  int n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec == std::errc() && ptr == text.data() + text.size() && n > 0) {
    budget = budget.with_order_limit(n);
  }
  return budget;
}

EnumerationBudget EnumerationBudget::with_order_limit(int n) const {
  EnumerationBudget out = *this;
  out.independent_max_order = n;
  out.dominating_max_order = n;
  return out;
}

}  // namespace welldom
