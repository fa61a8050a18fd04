#ifndef QUANDELIER_FP_GROUP_HPP_
#define QUANDELIER_FP_GROUP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "quandelier/budget.hpp"
#include "quandelier/perm_group.hpp"
#include "quandelier/quandle.hpp"
#include "quandelier/smith.hpp"
#include "quandelier/todd_coxeter.hpp"
#include "quandelier/word.hpp"

namespace quandelier {

  // Z^free_rank x Z_{d_1} x ... x Z_{d_k} with d_1 | d_2 | ... and d_i >= 2.
  struct AbelianInvariants {
    std::size_t          free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const noexcept {
      return free_rank == 0 && torsion.empty();
    }
    bool is_finite() const noexcept {
      return free_rank == 0;
    }
    // Group order; only meaningful when is_finite().
    Integer order() const;

    // Normalizes an arbitrary list of cyclic orders (0 = infinite cyclic,
    // 1 ignored) into invariant factors.
    static AbelianInvariants from_cyclic_orders(std::vector<Integer> orders);

    friend bool operator==(AbelianInvariants const&,
                           AbelianInvariants const&) = default;
  };

  // "rank <r> torsion <d1> <d2> ..." with "-" for no torsion.
  std::string to_string(AbelianInvariants const& a);

  // One generator x_a per element; relators x_b^-1 x_a x_b x_{a*b}^-1 for
  // a != b, deduplicated after free reduction.
  Presentation adjoint_presentation(FiniteQuandle const& q);

  // Relator exponent matrix (relators x generators).
  Matrix<long long> relation_matrix(Presentation const& p);

  AbelianInvariants abelian_invariants(Presentation const& p);

  // |Hom(src, target)| for finite `target`.
  Integer count_homs_to_abelian(AbelianInvariants const& src,
                                AbelianInvariants const& target);

  // Hom(src, target) as an abelian group.
  AbelianInvariants hom_group(AbelianInvariants const& src,
                              AbelianInvariants const& target);

  // Every assignment of target elements to the generators that kills all
  // relators, as tuples of element indices in lexicographic order.  Throws
  // BudgetExceeded if order^generators exceeds `budget`.
  std::vector<std::vector<std::size_t>>
  enumerate_homs(Presentation const& p,
                 FiniteGroup const&  target,
                 std::size_t         budget);

  // Evaluates a word in the target group given generator images.
  std::size_t evaluate(Word const&                    w,
                       std::span<std::size_t const>   images,
                       FiniteGroup const&             target);

  // Result of Tietze simplification: `substitution[g]` expresses original
  // generator g as a word in the generators of `presentation`.
  struct Simplified {
    Presentation      presentation;
    std::vector<Word> substitution;
  };

  // Eliminates generators that occur exactly once in some relator, shortest
  // relators first, as long as the total relator length does not grow
  // beyond `length_limit`.
  Simplified simplify(Presentation const& p, std::size_t length_limit = 100'000);

}  // namespace quandelier

#endif  // QUANDELIER_FP_GROUP_HPP_
