#ifndef QUANDELIER_PERM_GROUP_HPP_
#define QUANDELIER_PERM_GROUP_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace quandelier {

  using Point = std::size_t;

  // A bijection of {0, ..., degree - 1}.  Permutations act on the right:
  // x^(a*b) = (x^a)^b, so `a * b` means "apply a, then b".
  class Perm {
   public:
    Perm() = default;

    // Throws InvalidArgument unless `images` is a bijection.
    explicit Perm(std::vector<Point> images);

    static Perm identity(std::size_t degree);

    std::size_t degree() const noexcept {
      return images_.size();
    }

    Point operator[](Point x) const noexcept {
      return images_[x];
    }

    std::span<Point const> images() const noexcept {
      return images_;
    }

    Perm inverse() const;
    bool is_identity() const noexcept;

    friend Perm operator*(Perm const& a, Perm const& b);

    friend bool operator==(Perm const&, Perm const&)  = default;
    friend auto operator<=>(Perm const&, Perm const&) = default;

   private:
    struct Unchecked {};
    Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

    std::vector<Point> images_;
  };

  struct PermHash {
    std::size_t operator()(Perm const& p) const noexcept;
  };

  // A finite permutation group stored as its full element list.  Element 0
  // is always the identity; further elements appear in the order a
  // breadth-first closure over the generators discovered them.
  class FiniteGroup {
   public:
    FiniteGroup() = default;

    std::size_t degree() const noexcept {
      return degree_;
    }
    std::size_t order() const noexcept {
      return elements_.size();
    }
    std::vector<Perm> const& elements() const noexcept {
      return elements_;
    }
    Perm const& element(std::size_t i) const {
      return elements_.at(i);
    }
    // Positions of the generators inside elements().
    std::vector<std::size_t> const& generators() const noexcept {
      return generators_;
    }
    std::size_t identity_index() const noexcept {
      return 0;
    }

    std::optional<std::size_t> index_of(Perm const& p) const;
    bool contains(Perm const& p) const {
      return index_of(p).has_value();
    }

    // Index of elements()[i] * elements()[j].
    std::size_t product(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const;

    bool is_abelian() const;

    // Builds a group from an explicit element list whose first entry is the
    // identity.  The list is checked to be closed under products with the
    // generators (given as positions) and to be generated by them; throws
    // InvalidArgument otherwise.
    static FiniteGroup from_elements(std::vector<Perm>        elements,
                                     std::vector<std::size_t> generators);

   private:
    friend FiniteGroup closure(std::span<Perm const>, std::size_t,
                               std::size_t);

    std::size_t                                      degree_ = 0;
    std::vector<Perm>                                elements_;
    std::vector<std::size_t>                         generators_;
    std::unordered_map<Perm, std::size_t, PermHash> index_;
  };

  // The group generated by `generators` (all of degree `degree`).  Throws
  // BudgetExceeded once more than `budget` elements have been found.
  FiniteGroup closure(std::span<Perm const> generators,
                      std::size_t           degree,
                      std::size_t           budget);

  // Orbits of the group on {0, ..., degree - 1}, or on the given points.
  // Each orbit is sorted; orbits are ordered by their minimum.
  std::vector<std::vector<Point>> orbits(FiniteGroup const& group);
  std::vector<std::vector<Point>> orbits(FiniteGroup const&   group,
                                         std::span<Point const> points);

  // Member index sets (positions in the parent's element list) of every
  // subgroup, ordered by (order, sorted members).
  std::vector<std::vector<std::size_t>>
  subgroup_index_sets(FiniteGroup const& group, std::size_t budget);

  // Every subgroup (not up to conjugacy), same ordering as above.
  std::vector<FiniteGroup> subgroups(FiniteGroup const& group,
                                     std::size_t        budget);

  // True iff `element` commutes with every generator of `group`.
  bool is_central(Perm const& element, FiniteGroup const& group);

  bool is_normal(FiniteGroup const&               group,
                 std::span<std::size_t const> members);

}  // namespace quandelier

#endif  // QUANDELIER_PERM_GROUP_HPP_
