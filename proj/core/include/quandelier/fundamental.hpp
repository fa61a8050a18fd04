#ifndef QUANDELIER_FUNDAMENTAL_HPP_
#define QUANDELIER_FUNDAMENTAL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandelier/budget.hpp"
#include "quandelier/fp_group.hpp"
#include "quandelier/perm_group.hpp"
#include "quandelier/quandle.hpp"
#include "quandelier/smith.hpp"
#include "quandelier/todd_coxeter.hpp"
#include "quandelier/word.hpp"

namespace quandelier {

  // ---------------------------------------------------------------------
  // Path complex

  struct Edge {
    std::size_t source = 0;
    std::size_t label  = 0;
    std::size_t target = 0;  // source * label
  };

  // An oriented edge step: edge index and direction (+1 or -1).
  struct EdgeStep {
    std::size_t edge = 0;
    int         sign = 1;

    friend bool operator==(EdgeStep const&, EdgeStep const&) = default;
  };

  using EdgePath = std::vector<EdgeStep>;

  // Vertices are the quandle elements, edge (a, b) has index a * n + b and
  // runs from a to a * b.  One loop cell per element on edge (a, a), and one
  // square cell per triple (a, b, c), index (a * n + b) * n + c, with
  // boundary (a,b) (a*b,c) (a*c,b*c)^-1 (a,c)^-1.
  class PathComplex {
   public:
    PathComplex() = default;

    std::size_t vertex_count() const noexcept {
      return n_;
    }
    std::size_t edge_index(std::size_t a, std::size_t b) const noexcept {
      return a * n_ + b;
    }
    std::vector<Edge> const& edges() const noexcept {
      return edges_;
    }
    std::vector<EdgePath> const& loop_cells() const noexcept {
      return loop_cells_;
    }
    std::vector<EdgePath> const& square_cells() const noexcept {
      return square_cells_;
    }

    // Endpoint of a path started at `start`, or nullopt if some step does
    // not begin where the previous one ended.
    std::optional<std::size_t> walk(std::size_t     start,
                                    EdgePath const& path) const;
    bool is_closed(EdgePath const& path) const;

    // Boundary maps restricted to the given vertex set (a union of
    // components), as row-per-chain matrices: boundary1 has one row per
    // edge leaving the set and one column per vertex; boundary2 one row per
    // cell based in the set and one column per such edge.  Rows and columns
    // follow the ascending vertex, edge and cell index order.
    Matrix<long long> boundary1(std::span<std::size_t const> vertices) const;
    Matrix<long long> boundary2(std::span<std::size_t const> vertices) const;

   private:
    friend PathComplex build_complex(FiniteQuandle const&);

    std::size_t           n_ = 0;
    std::vector<Edge>     edges_;
    std::vector<EdgePath> loop_cells_;
    std::vector<EdgePath> square_cells_;
  };

  PathComplex build_complex(FiniteQuandle const& q);

  // ---------------------------------------------------------------------
  // Spanning-tree presentation of pi_1

  struct Pi1Presentation {
    Presentation             presentation;
    std::size_t              basepoint = 0;
    std::vector<std::size_t> vertices;  // the basepoint's component
    // generator g is the non-tree edge generator_edges[g]
    std::vector<std::size_t> generator_edges;
    // tree_path[v]: word in the adjoint generators along the tree from the
    // basepoint to v (empty outside the component)
    std::vector<Word> tree_path;

    // The loop basepoint -> a -> a*b -> basepoint behind generator g as an
    // adjoint word.
    Word loop_word(std::size_t generator, FiniteQuandle const& q) const;
  };

  Pi1Presentation pi1_presentation(FiniteQuandle const& q,
                                   std::size_t          basepoint);

  // ---------------------------------------------------------------------
  // Adj(Q)^0 as cosets of <x_q>

  // Each coset <x_q> g holds exactly one degree-zero element
  // x_q^-deg(g) g; cosets are identified with those elements.
  class Adj0Enumeration {
   public:
    Adj0Enumeration() = default;

    std::size_t basepoint() const noexcept {
      return basepoint_;
    }
    std::size_t size() const noexcept {
      return table_.coset_count();
    }
    CosetTable const& table() const noexcept {
      return table_;
    }
    // q^g for the degree-zero element g of the coset.
    std::size_t endpoint(std::size_t coset) const {
      return endpoint_.at(coset);
    }
    std::vector<std::size_t> const& endpoints() const noexcept {
      return endpoint_;
    }

    // The degree-zero element of the coset as an adjoint word.
    Word element_word(std::size_t coset) const;
    // Coset of the given adjoint word.
    std::size_t coset_of(Word const& w) const {
      return table_.trace(0, w);
    }
    std::size_t multiply(std::size_t c, std::size_t d) const;
    std::size_t inverse(std::size_t c) const;

    // Cosets with endpoint equal to the basepoint, ascending (coset 0, the
    // identity, first).
    std::vector<std::size_t> stabilizer() const;

   private:
    friend Adj0Enumeration adj0_enumeration_at(FiniteQuandle const&,
                                               std::size_t, std::size_t);

    std::size_t              basepoint_ = 0;
    CosetTable               table_;
    std::vector<std::size_t> endpoint_;
    std::vector<Word>        element_words_;
  };

  // Enumerates Adj(Q) modulo <x_q>.  Throws BudgetExceeded; for a quandle
  // with more than one component the enumeration never terminates.
  Adj0Enumeration adj0_enumeration_at(FiniteQuandle const& q,
                                      std::size_t          basepoint,
                                      std::size_t budget = Budgets{}.cosets);

  // Same, at the basepoint of the given component.
  Adj0Enumeration adj0_enumeration(FiniteQuandle const& q,
                                   std::size_t          component,
                                   std::size_t budget = Budgets{}.cosets);

  // ---------------------------------------------------------------------
  // Fundamental group

  struct BudgetNote {
    std::string quantity;
    std::size_t reached = 0;
  };

  struct FundamentalGroup {
    std::size_t       basepoint = 0;
    Pi1Presentation   presentation;
    AbelianInvariants abelian;

    // Present when the Adj(Q)^0 enumeration terminated.
    std::optional<Adj0Enumeration> enumeration;
    // Cosets forming pi_1, ascending; elements[0] is the identity.
    std::vector<std::size_t> elements;
    // Right regular action c -> c k on all cosets, element i of the group
    // being elements[i].  Generators are the images of the presentation
    // generators.
    std::optional<FiniteGroup> finite_form;
    // Position in `elements` of each presentation generator.
    std::vector<std::size_t> generator_elements;
    // Order found by enumerating the presentation over the trivial subgroup.
    std::optional<std::size_t> presentation_order;
    std::optional<BudgetNote>  budget_failure;

    std::optional<std::size_t> order() const {
      if (!finite_form) {
        return std::nullopt;
      }
      return finite_form->order();
    }
    // Position in `elements` of the coset, if it belongs to pi_1.
    std::optional<std::size_t> position(std::size_t coset) const;
    std::size_t                multiply(std::size_t i, std::size_t j) const;
  };

  FundamentalGroup fundamental_group(FiniteQuandle const& q,
                                     std::size_t          basepoint,
                                     std::size_t budget = Budgets{}.cosets);

  // ---------------------------------------------------------------------
  // Universal covering

  struct CoverPiece {
    std::size_t              component = 0;
    std::size_t              offset    = 0;  // first cover element
    Adj0Enumeration          enumeration;
    std::vector<std::size_t> pi1;  // stabilizer cosets, ascending
    // deck[k]: left multiplication by pi1[k] on the whole cover
    std::vector<Perm> deck_perms;
    FiniteGroup       deck;  // element order matches pi1
  };

  // Cover elements are the pairs (component i, coset c), numbered piece by
  // piece; element offset_i + c projects to endpoint_i(c).
  struct UniversalCover {
    QuandleHom              projection;
    std::vector<CoverPiece> pieces;

    FiniteQuandle const& cover() const noexcept {
      return projection.source();
    }
    std::size_t element(std::size_t component, std::size_t coset) const {
      return pieces.at(component).offset + coset;
    }
    // The lift of the basepoint of the component (its identity coset).
    std::size_t base_lift(std::size_t component) const {
      return pieces.at(component).offset;
    }
  };

  UniversalCover universal_cover(FiniteQuandle const& q,
                                 std::size_t budget = Budgets{}.cosets);

  // ---------------------------------------------------------------------
  // Monodromy, lifting, Galois correspondence

  struct Monodromy {
    std::vector<std::size_t> fibre;   // cover elements over the basepoint
    std::vector<Perm>        action;  // per element of pi_1, on positions

    // Positions (into pi_1's element list) fixing the given fibre position.
    std::vector<std::size_t> stabilizer(std::size_t fibre_position) const;
  };

  // Right action of pi_1(Q, q) on the fibre over q.  `p` must be a
  // covering with target Q; throws BudgetExceeded if pi_1 has no finite
  // form.
  Monodromy monodromy(QuandleHom const& p, FundamentalGroup const& pi1);
  Monodromy monodromy(QuandleHom const& p, std::size_t basepoint,
                      std::size_t budget = Budgets{}.cosets);

  struct LiftResult {
    std::optional<QuandleHom> lift;
    // When no lift exists: two adjoint words over the source taking the
    // basepoint to the same element whose forced images differ.
    std::pair<Word, Word> witness;

    explicit operator bool() const noexcept {
      return lift.has_value();
    }
  };

  // Lifts f : (X, x) -> (Q, p(lift_point)) through the covering p.  X must
  // be connected.
  LiftResult check_lifting(QuandleHom const& f, std::size_t x,
                           QuandleHom const& p, std::size_t lift_point);

  struct ConnectedCovering {
    std::vector<std::size_t> subgroup;  // positions in pi_1's elements
    QuandleHom               covering;
    std::size_t              base_lift = 0;
    std::size_t              fibre     = 0;
    bool                     galois    = false;
  };

  struct CoveringEnumeration {
    FundamentalGroup               pi1;
    UniversalCover                 universal;
    std::vector<ConnectedCovering> coverings;
  };

  // One pointed connected covering per subgroup of pi_1(Q, q), in the
  // subgroup order of `subgroup_index_sets`.  Q must be connected.
  CoveringEnumeration
  enumerate_connected_coverings(FiniteQuandle const& q,
                                std::size_t          basepoint,
                                Budgets const&       budgets = {});

}  // namespace quandelier

#endif  // QUANDELIER_FUNDAMENTAL_HPP_
