#ifndef QUANDELIER_TODD_COXETER_HPP_
#define QUANDELIER_TODD_COXETER_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "quandelier/budget.hpp"
#include "quandelier/word.hpp"

namespace quandelier {

  // A complete coset table: the right action of the generators (and their
  // inverses) on the cosets of a subgroup.  Coset 0 is the subgroup itself.
  class CosetTable {
   public:
    CosetTable() = default;

    std::size_t coset_count() const noexcept {
      return cosets_;
    }
    std::size_t generator_count() const noexcept {
      return generators_;
    }

    std::size_t act(std::size_t coset, Letter l) const noexcept {
      return table_[coset * 2 * generators_ + column(l)];
    }
    std::size_t trace(std::size_t coset, Word const& w) const noexcept {
      for (Letter l : w.letters()) {
        coset = act(coset, l);
      }
      return coset;
    }

    // A shortest word (in breadth-first column order) taking coset 0 to
    // the given coset.
    Word const& representative(std::size_t coset) const {
      return representatives_.at(coset);
    }

    // Every relator fixes every coset, every given word fixes coset 0 and
    // every column is a bijection.
    bool is_consistent(Presentation const&     p,
                       std::span<Word const>   subgroup) const;

   private:
    friend CosetTable todd_coxeter(Presentation const&, std::span<Word const>,
                                   std::size_t);

    static std::size_t column(Letter l) noexcept {
      return 2 * generator_of(l) + (is_inverse(l) ? 1 : 0);
    }

    std::size_t              cosets_     = 0;
    std::size_t              generators_ = 0;
    std::vector<std::size_t> table_;
    std::vector<Word>        representatives_;
  };

  // Hasse-Leech-Trotter coset enumeration with immediate coincidence
  // processing and no lookahead.  Cosets are numbered in definition order
  // after removing the dead ones.  Throws BudgetExceeded when the number of
  // live cosets would exceed `budget`; the index may still be finite.
  CosetTable todd_coxeter(Presentation const&   p,
                          std::span<Word const> subgroup_generators,
                          std::size_t           budget = Budgets{}.cosets);

}  // namespace quandelier

#endif  // QUANDELIER_TODD_COXETER_HPP_
