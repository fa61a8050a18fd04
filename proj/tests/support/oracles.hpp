#ifndef QUANDELIER_TESTS_ORACLES_HPP_
#define QUANDELIER_TESTS_ORACLES_HPP_

// Deliberately naive reference computations.  None of them share code with
// the library beyond the basic value types.

#include <cstddef>
#include <optional>
#include <vector>

#include "quandelier/cohomology.hpp"
#include "quandelier/perm_group.hpp"
#include "quandelier/quandle.hpp"
#include "quandelier/smith.hpp"

namespace quandelier::testing {

  bool naive_is_quandle(SquareTable const& t);

  // Connected components by union of x ~ x*y.
  std::vector<std::vector<std::size_t>> naive_components(FiniteQuandle const& q);

  std::size_t naive_group_order(std::vector<Perm> const& generators,
                                std::size_t              degree);

  // Subsets of the element list closed under products (orders <= 16).
  std::size_t naive_subgroup_count(FiniteGroup const& g);

  // Invariant factors from gcds of k x k minors (tiny matrices only).
  std::vector<Integer> naive_invariant_factors(Matrix<long long> const& m);

  // The covering definition, checked pair by pair.
  bool naive_is_covering(FiniteQuandle const& src, FiniteQuandle const& dst,
                         std::vector<std::size_t> const& map);

  // Cocycle law over every cochain with uniform coefficients, no pruning.
  std::size_t naive_cocycle_count(FiniteQuandle const& q, GroupTable const& g);
  std::size_t naive_coboundary_count(FiniteQuandle const& q,
                                     GroupTable const&    g);

  // Searches all cochains g: Q -> Lambda with f = g(a)^-1 f'(a,b) g(a*b).
  std::optional<std::vector<std::size_t>>
  naive_cohomologous(FiniteQuandle const& q, GroupTable const& g,
                     Cocycle2 const& f, Cocycle2 const& f_prime);

}  // namespace quandelier::testing

#endif  // QUANDELIER_TESTS_ORACLES_HPP_
