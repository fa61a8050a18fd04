#ifndef QUANDELIER_COHOMOLOGY_HPP_
#define QUANDELIER_COHOMOLOGY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quandelier/budget.hpp"
#include "quandelier/fp_group.hpp"
#include "quandelier/fundamental.hpp"
#include "quandelier/perm_group.hpp"
#include "quandelier/quandle.hpp"

namespace quandelier {

  // ---------------------------------------------------------------------
  // Coefficient groups

  // A finite group on {0, ..., order-1} given by its multiplication table.
  // Groups built from invariant factors number their elements in mixed
  // radix, the first factor varying slowest, and remember the factors.
  class GroupTable {
   public:
    GroupTable() = default;

    static GroupTable cyclic(std::size_t d);
    // Z_{d_1} x ... x Z_{d_k}; every d_i >= 1.
    static GroupTable abelian(std::vector<std::size_t> factors);
    // Validates closure, identity, inverses and associativity.
    static GroupTable from_table(SquareTable mul, std::size_t identity);
    // Element i is group.element(i).
    static GroupTable from_group(FiniteGroup const& group);

    std::size_t order() const noexcept {
      return mul_.size();
    }
    std::size_t identity() const noexcept {
      return identity_;
    }
    std::size_t multiply(std::size_t x, std::size_t y) const noexcept {
      return mul_(x, y);
    }
    std::size_t inverse(std::size_t x) const noexcept {
      return inverse_[x];
    }
    SquareTable const& table() const noexcept {
      return mul_;
    }
    bool is_abelian() const noexcept {
      return abelian_;
    }

    // Invariant factors as given to `abelian` (empty for table groups).
    std::vector<std::size_t> const& factors() const noexcept {
      return factors_;
    }
    bool has_factors() const noexcept {
      return has_factors_;
    }
    std::vector<std::size_t> exponents(std::size_t x) const;
    std::size_t from_exponents(std::span<std::size_t const> e) const;

    // Abelian invariants of the group (abelian groups only).
    AbelianInvariants invariants() const;

    // Right regular representation x -> x * g, listing the identity first
    // and then the other elements ascending.
    FiniteGroup regular_representation() const;
    // Position of each element in regular_representation().
    std::vector<std::size_t> regular_index() const;

    friend bool operator==(GroupTable const& x, GroupTable const& y) {
      return x.mul_ == y.mul_ && x.identity_ == y.identity_;
    }

   private:
    void finish();

    SquareTable              mul_;
    std::size_t              identity_ = 0;
    std::vector<std::size_t> inverse_;
    bool                     abelian_     = true;
    bool                     has_factors_ = false;
    std::vector<std::size_t> factors_;
  };

  // One coefficient group per connected component of Q.
  struct Coefficients {
    std::vector<GroupTable> groups;

    static Coefficients uniform(FiniteQuandle const& q, GroupTable const& g);

    GroupTable const& at(std::size_t component) const {
      return groups.at(component);
    }
    bool is_abelian() const;
  };

  // ---------------------------------------------------------------------
  // Cochains

  // f(a, b) lies in the coefficient group of a's component.
  struct Cocycle2 {
    std::size_t              n = 0;
    std::vector<std::size_t> values;  // row-major

    std::size_t operator()(std::size_t a, std::size_t b) const {
      return values.at(a * n + b);
    }
    std::size_t& at(std::size_t a, std::size_t b) {
      return values.at(a * n + b);
    }

    static Cocycle2 trivial(FiniteQuandle const& q, Coefficients const& c);

    friend bool operator==(Cocycle2 const&, Cocycle2 const&) = default;
  };

  // A 1-cochain g with g(a) in the group of a's component.
  using Cochain1 = std::vector<std::size_t>;

  struct CocycleCheck {
    enum class Failure { none, out_of_range, diagonal, law };

    bool                     ok      = false;
    Failure                  failure = Failure::none;
    std::vector<std::size_t> witness;  // (a), (a, b) or (a, b, c)

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // f(a, a) = 1 and f(a, b) f(a*b, c) = f(a, c) f(a*c, b*c).
  CocycleCheck is_cocycle(FiniteQuandle const& q, Coefficients const& c,
                          Cocycle2 const& f);

  // (a, b) -> g(a)^-1 f(a, b) g(a * b).
  Cocycle2 rescale(FiniteQuandle const& q, Coefficients const& c,
                   Cocycle2 const& f, Cochain1 const& g);
  Cocycle2 coboundary(FiniteQuandle const& q, Coefficients const& c,
                      Cochain1 const& g);

  // A cochain g with f = rescale(f', g), if one exists.  Such a g is fixed
  // by its value at each component's basepoint; abelian groups need one
  // try per component, other groups at most |Lambda_i| tries, each
  // propagation step counted against `budget`.
  std::optional<Cochain1>
  are_cohomologous(FiniteQuandle const& q, Coefficients const& c,
                   Cocycle2 const& f, Cocycle2 const& f_prime,
                   std::size_t budget = Budgets{}.propagations);

  // Pull-back along phi : X -> Q.  The coefficient group of a component of
  // X is that of its image component.
  std::pair<Coefficients, Cocycle2>
  pullback_cocycle(QuandleHom const& phi, Coefficients const& c,
                   Cocycle2 const& f);

  // ---------------------------------------------------------------------
  // Homology and cohomology groups

  // H_1 of each component of the path complex, computed with Smith forms of
  // the boundary matrices.
  std::vector<AbelianInvariants> h2_integral(FiniteQuandle const& q);

  struct H2Component {
    AbelianInvariants pi1_abelian;
    AbelianInvariants group;    // Hom(pi_1^ab, Lambda_i)
    Integer           classes;  // its order
  };

  // Abelian coefficients; one entry per component.
  std::vector<H2Component> h2_with_coefficients(FiniteQuandle const& q,
                                                Coefficients const&  c);

  struct H2BruteForce {
    std::size_t component = 0;
    std::size_t cocycles  = 0;
    std::size_t coboundaries = 0;  // size of the trivial class
    // one cocycle per class; the trivial class comes first
    std::vector<Cocycle2> representatives;
  };

  // Enumerates every cocycle supported on the component (identity
  // elsewhere) and groups them into classes.  Throws BudgetExceeded when
  // |Lambda_i|^(|Q_i| (n - 1)) or |Lambda_i|^|Q_i| exceeds `budget`.
  H2BruteForce h2_brute_force(FiniteQuandle const& q, Coefficients const& c,
                              std::size_t component,
                              std::size_t budget = Budgets{}.cochains);

  // ---------------------------------------------------------------------
  // Extensions

  // A principal covering Lambda ~> E -> Q.  action[x][l] = l . x for l in
  // the group of the component below x.
  struct Extension {
    QuandleHom                            projection;
    Coefficients                          coefficients;
    std::vector<std::vector<std::size_t>> action;

    FiniteQuandle const& total() const noexcept {
      return projection.source();
    }
    FiniteQuandle const& base() const noexcept {
      return projection.target();
    }
    std::size_t act(std::size_t lambda, std::size_t x) const {
      return action.at(x).at(lambda);
    }
    GroupTable const& group_over(std::size_t x) const {
      return coefficients.at(base().component_of(projection(x)));
    }
  };

  // Reason the extension axioms fail, or nullopt: group action, (E1),
  // free and transitive fibres, covering.
  std::optional<std::string> extension_defect(Extension const& e);

  // Elements (u, a) ordered by a, then u; (u, a) * (v, b) = (u f(a, b),
  // a * b); l . (u, a) = (l u, a).
  Extension extension_from_cocycle(FiniteQuandle const& q,
                                   Coefficients const&  c,
                                   Cocycle2 const&      f);
  // Index of (u, a) in extension_from_cocycle's numbering.
  std::size_t cocycle_extension_index(FiniteQuandle const& q,
                                      Coefficients const& c, std::size_t u,
                                      std::size_t a);

  // s(a) = the smallest element over a.
  std::vector<std::size_t> canonical_section(Extension const& e);

  // The f with s(a) * s(b) = f(a, b) . s(a * b).
  Cocycle2 cocycle_from_extension(Extension const&             e,
                                  std::span<std::size_t const> section);

  // pi_1 at every component's basepoint.
  std::vector<FundamentalGroup>
  graded_fundamental_group(FiniteQuandle const& q,
                           std::size_t          budget = Budgets{}.cosets);

  // Images of all pi_1 elements from images of the presentation
  // generators; throws InvalidArgument if they do not define a
  // homomorphism.
  std::vector<std::size_t>
  extend_hom(FundamentalGroup const& pi1, GroupTable const& target,
             std::span<std::size_t const> generator_images);

  // Every homomorphism pi_1 -> target, as images of pi_1's elements.
  std::vector<std::vector<std::size_t>>
  enumerate_pi1_homs(FundamentalGroup const& pi1, GroupTable const& target,
                     std::size_t budget = Budgets{}.cochains);

  // `homs[i]` maps the elements of pi1[i] into the i-th coefficient group.
  Extension
  extension_from_hom(FiniteQuandle const&                  q,
                     Coefficients const&                   c,
                     std::span<FundamentalGroup const>     pi1,
                     std::span<std::vector<std::size_t> const> homs,
                     std::size_t budget = Budgets{}.cosets);

  // Monodromy on the smallest lift of each basepoint: e~^k = h(k) . e~.
  std::vector<std::vector<std::size_t>>
  hom_from_extension(Extension const&                  e,
                     std::span<FundamentalGroup const> pi1);

  // A projection-respecting, equivariant isomorphism E1 -> E2, if any.
  std::optional<std::vector<std::size_t>>
  are_equivalent_extensions(Extension const& e1, Extension const& e2,
                            std::size_t budget = Budgets{}.propagations);

}  // namespace quandelier

#endif  // QUANDELIER_COHOMOLOGY_HPP_
