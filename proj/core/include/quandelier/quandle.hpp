#ifndef QUANDELIER_QUANDLE_HPP_
#define QUANDELIER_QUANDLE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quandelier/budget.hpp"
#include "quandelier/error.hpp"
#include "quandelier/perm_group.hpp"

namespace quandelier {

  // Row-major square table of element indices.
  class SquareTable {
   public:
    SquareTable() = default;
    explicit SquareTable(std::size_t n, std::size_t fill = 0)
        : n_(n), data_(n * n, fill) {}
    SquareTable(std::size_t n, std::vector<std::size_t> data);

    std::size_t size() const noexcept {
      return n_;
    }
    std::size_t operator()(std::size_t row, std::size_t col) const noexcept {
      return data_[row * n_ + col];
    }
    std::size_t& operator()(std::size_t row, std::size_t col) noexcept {
      return data_[row * n_ + col];
    }
    std::span<std::size_t const> data() const noexcept {
      return data_;
    }

    friend bool operator==(SquareTable const&, SquareTable const&) = default;

   private:
    std::size_t              n_ = 0;
    std::vector<std::size_t> data_;
  };

  enum class Axiom { Q1, Q2, Q3 };

  std::string to_string(Axiom axiom);

  // The table fails a quandle axiom.  The witness is (a) for Q1, (a, a', b)
  // for Q2 (two rows with equal entries in column b) and (a, b, c) for Q3;
  // all 0-based.
  class NotAQuandle : public Error {
   public:
    NotAQuandle(Axiom axiom, std::vector<std::size_t> witness);

    Axiom axiom() const noexcept {
      return axiom_;
    }
    std::vector<std::size_t> const& witness() const noexcept {
      return witness_;
    }

   private:
    Axiom                    axiom_;
    std::vector<std::size_t> witness_;
  };

  struct Components {
    std::vector<std::vector<std::size_t>> parts;  // each sorted
    std::vector<std::size_t>              index;  // element -> part

    std::size_t count() const noexcept {
      return parts.size();
    }
  };

  // A finite quandle on {0, ..., n-1}: op(a, b) = a * b and
  // inv_op(a, b) = a *bar b.  Instances are always validated; the only way
  // to obtain one is `validate`.
  //
  // The grading is the partition into connected components and the
  // basepoints default to the minimum of each component, which makes every
  // instance well-pointed.
  class FiniteQuandle {
   public:
    FiniteQuandle() = default;

    // Checks Q1, Q2, Q3 in that order and throws NotAQuandle with the first
    // violation found.  Throws InvalidArgument for an empty or
    // out-of-range table.
    static FiniteQuandle validate(SquareTable op);

    std::size_t size() const noexcept {
      return op_.size();
    }
    std::size_t op(std::size_t a, std::size_t b) const noexcept {
      return op_(a, b);
    }
    std::size_t inv_op(std::size_t a, std::size_t b) const noexcept {
      return inv_op_(a, b);
    }
    SquareTable const& table() const noexcept {
      return op_;
    }
    SquareTable const& inverse_table() const noexcept {
      return inv_op_;
    }

    Components const& components() const noexcept {
      return components_;
    }
    std::size_t component_count() const noexcept {
      return components_.count();
    }
    std::size_t component_of(std::size_t a) const noexcept {
      return components_.index[a];
    }
    bool is_connected() const noexcept {
      return components_.count() == 1;
    }

    // One basepoint per component, indexed by component.
    std::vector<std::size_t> const& basepoints() const noexcept {
      return basepoints_;
    }
    std::size_t basepoint(std::size_t component) const {
      return basepoints_.at(component);
    }

    // Replaces the basepoints; `points` must contain exactly one element of
    // every component (in any order).
    FiniteQuandle with_basepoints(std::span<std::size_t const> points) const;

    // The right translation x -> x * b.
    Perm right_translation(std::size_t b) const;

    friend bool operator==(FiniteQuandle const& x, FiniteQuandle const& y) {
      return x.op_ == y.op_;
    }

   private:
    SquareTable              op_;
    SquareTable              inv_op_;
    Components               components_;
    std::vector<std::size_t> basepoints_;
  };

  // A coarser grading than the components is accepted: `classes` assigns a
  // class to every element, must be constant on components, and is refined
  // to the component partition.  Returns, per class, the components it was
  // split into.
  std::vector<std::vector<std::size_t>>
  refine_grading(FiniteQuandle const& q, std::span<std::size_t const> classes);

  // Standard constructors.
  FiniteQuandle trivial(std::size_t n);
  FiniteQuandle dihedral(std::size_t n);                 // a*b = 2b - a
  FiniteQuandle q_mn(std::size_t m, std::size_t n);      // Z_m block, Z_n block
  FiniteQuandle alexander_cyclic(std::size_t n, std::size_t t);

  // Alexander quandle of an abelian group given by its addition table,
  // with the automorphism T given by the images of the elements:
  //   a * b = T(a) - T(b) + b.
  FiniteQuandle alexander(SquareTable const&           addition,
                          std::size_t                  zero,
                          std::span<std::size_t const> automorphism);

  // The conjugacy class of `seed` inside `group` with a * b = b^-1 a b.
  // Elements are numbered in the order conjugation by the group generators
  // discovers them, starting with the seed.  The returned vector holds the
  // corresponding permutations.
  std::pair<FiniteQuandle, std::vector<Perm>>
  conjugation_class(FiniteGroup const& group, Perm const& seed);

  FiniteQuandle conj_class(FiniteGroup const& group, Perm const& seed);

  // Core quandle a * b = b a^-1 b on the elements of `group`.
  FiniteQuandle core(FiniteGroup const& group);

  // Symmetric group on k letters generated by (0 1) and (0 1 ... k-1);
  // convenient for test data.
  FiniteGroup symmetric_group(std::size_t k);
  FiniteGroup alternating_group(std::size_t k);
  Perm        transposition(std::size_t degree, Point i, Point j);
  Perm        cycle(std::size_t degree, std::span<Point const> points);

  Components components(FiniteQuandle const& q);

  enum class InnerVariant { full, degree_zero };

  struct InnerGroup {
    FiniteGroup       group;
    std::vector<Perm> inn;  // inn[a] = right translation by a
  };

  // Inn(Q) generated by the right translations, or the transvection group
  // generated by inn(0)^-1 inn(b).
  InnerGroup inner_group(FiniteQuandle const& q,
                         InnerVariant         variant,
                         std::size_t budget = Budgets{}.group_elements);

  class NotAHomomorphism : public Error {
   public:
    NotAHomomorphism(std::size_t a, std::size_t b)
        : Error("map does not respect the operation at (" + std::to_string(a)
                + ", " + std::to_string(b) + ")"),
          a_(a),
          b_(b) {}

    std::pair<std::size_t, std::size_t> witness() const noexcept {
      return {a_, b_};
    }

   private:
    std::size_t a_, b_;
  };

  class QuandleHom {
   public:
    QuandleHom() = default;

    // Throws NotAHomomorphism or InvalidArgument.
    QuandleHom(FiniteQuandle source, FiniteQuandle target,
               std::vector<std::size_t> map);

    static QuandleHom identity(FiniteQuandle const& q);

    FiniteQuandle const& source() const noexcept {
      return source_;
    }
    FiniteQuandle const& target() const noexcept {
      return target_;
    }
    std::vector<std::size_t> const& map() const noexcept {
      return map_;
    }
    std::size_t operator()(std::size_t a) const noexcept {
      return map_[a];
    }

    bool is_surjective() const;
    // preimages[q] lists the source elements over q, ascending.
    std::vector<std::vector<std::size_t>> fibres() const;

    friend QuandleHom compose(QuandleHom const& first,
                              QuandleHom const& second);

   private:
    FiniteQuandle            source_;
    FiniteQuandle            target_;
    std::vector<std::size_t> map_;
  };

  struct CoveringCheck {
    enum class Failure { none, not_surjective, behaviour };

    bool    is_covering = false;
    Failure failure     = Failure::none;
    // not_surjective: (missed target element); behaviour: (a, x, y) with
    // p(x) == p(y) but a * x != a * y.
    std::vector<std::size_t> witness;

    explicit operator bool() const noexcept {
      return is_covering;
    }
  };

  CoveringCheck is_covering(QuandleHom const& p);

  struct Pullback {
    // Elements are the pairs (x, y) with f(x) == p(y), in lexicographic
    // order; pairs[k] is the pair behind element k.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    QuandleHom projection;  // onto the source of f
    QuandleHom to_cover;    // onto the source of p
  };

  Pullback pullback(QuandleHom const& p, QuandleHom const& f);

  struct CoveringUnion {
    // tags[k] = (summand, element of that summand's source)
    std::vector<std::pair<std::size_t, std::size_t>> tags;
    QuandleHom                                       projection;
  };

  CoveringUnion union_coverings(std::span<QuandleHom const> coverings);

  // The direct product Q x T where T = trivial(fibre) and its projection to
  // Q.  Element (a, s) has index a * fibre + s.
  QuandleHom trivial_covering(FiniteQuandle const& q, std::size_t fibre);

  // Quotient of q by an equivalence relation given as a class index per
  // element.  Throws InvalidArgument if the operation is not compatible.
  // Classes are renumbered by first appearance.
  std::pair<FiniteQuandle, std::vector<std::size_t>>
  quotient(FiniteQuandle const& q, std::span<std::size_t const> classes);

}  // namespace quandelier

#endif  // QUANDELIER_QUANDLE_HPP_
