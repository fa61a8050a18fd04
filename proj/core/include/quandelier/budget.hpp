#ifndef QUANDELIER_BUDGET_HPP_
#define QUANDELIER_BUDGET_HPP_

#include <cstddef>

namespace quandelier {

  // Default bounds for the enumerations.  Every long-running operation
  // takes its bound explicitly; these are only the values the tool uses
  // when nothing else is requested.
  struct Budgets {
    std::size_t cosets         = 1'000'000;
    std::size_t group_elements = 10'000;
    std::size_t subgroup_order = 2'000;
    std::size_t cochains       = std::size_t(1) << 20;
    std::size_t propagations   = 1'000'000;
  };

}  // namespace quandelier

#endif  // QUANDELIER_BUDGET_HPP_
