#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "quandelier/error.hpp"
#include "quandelier/fundamental.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace quandelier;
using namespace quandelier::testing;

namespace {

  constexpr std::size_t kSmallBudget = 100'000;

  std::size_t act_word(FiniteQuandle const& q, std::size_t x, Word const& w) {
    for (Letter l : w.letters()) {
      x = is_inverse(l) ? q.inv_op(x, generator_of(l))
                        : q.op(x, generator_of(l));
    }
    return x;
  }

  QuandleHom reduction(std::size_t from, std::size_t to) {
    std::vector<std::size_t> map(from);
    for (std::size_t a = 0; a < from; ++a) {
      map[a] = a % to;
    }
    return QuandleHom(dihedral(from), dihedral(to), map);
  }

  // Corpus quandles whose every component has finite Adj^0, small enough to
  // cover quickly.
  std::vector<Named> finite_corpus() {
    std::vector<Named> out;
    for (Named& n : full_corpus()) {
      try {
        for (std::size_t i = 0; i < n.quandle.component_count(); ++i) {
          adj0_enumeration(n.quandle, i, 20'000);
        }
        out.push_back(std::move(n));
      } catch (BudgetExceeded const&) {
      }
    }
    return out;
  }

}  // namespace

TEST(PathComplex, CellCounts) {
  struct Case {
    FiniteQuandle q;
    std::size_t   squares;
  };
  for (auto const& [q, squares] : {Case{trivial(1), 1}, Case{dihedral(3), 27},
                                   Case{q_mn(1, 1), 8}}) {
    PathComplex c = build_complex(q);
    std::size_t n = q.size();
    EXPECT_EQ(c.vertex_count(), n);
    EXPECT_EQ(c.edges().size(), n * n);
    EXPECT_EQ(c.loop_cells().size(), n);
    EXPECT_EQ(c.square_cells().size(), squares);
  }
}

TEST(PathComplex, CellBoundariesAreClosedAndTheComplexIsAChainComplex) {
  for (auto const& [name, q] : constructor_corpus()) {
    if (q.size() > 8) {
      continue;
    }
    PathComplex c = build_complex(q);
    for (EdgePath const& cell : c.loop_cells()) {
      EXPECT_TRUE(c.is_closed(cell)) << name;
    }
    for (EdgePath const& cell : c.square_cells()) {
      EXPECT_TRUE(c.is_closed(cell)) << name;
    }
    for (auto const& part : q.components().parts) {
      auto d1 = c.boundary1(part);
      auto d2 = c.boundary2(part);
      ASSERT_EQ(d2.cols(), d1.rows());
      for (std::size_t r = 0; r < d2.rows(); ++r) {
        for (std::size_t v = 0; v < d1.cols(); ++v) {
          long long s = 0;
          for (std::size_t e = 0; e < d2.cols(); ++e) {
            s += d2(r, e) * d1(e, v);
          }
          EXPECT_EQ(s, 0) << name;
        }
      }
    }
  }
}

TEST(Pi1Presentation, Examples) {
  Pi1Presentation d3 = pi1_presentation(dihedral(3), 0);
  EXPECT_TRUE(abelian_invariants(d3.presentation).is_trivial());
  EXPECT_EQ(todd_coxeter(d3.presentation, {}).coset_count(), 1U);

  Pi1Presentation t1 = pi1_presentation(trivial(1), 0);
  EXPECT_EQ(t1.presentation.generator_count, 1U);
  EXPECT_EQ(todd_coxeter(t1.presentation, {}).coset_count(), 1U);

  Pi1Presentation s4 = pi1_presentation(s4_transpositions(), 0);
  EXPECT_EQ(todd_coxeter(simplify(s4.presentation).presentation, {})
                .coset_count(),
            2U);
}

TEST(Pi1Presentation, GeneratorLoopsAreClosed) {
  for (auto const& [name, q] : full_corpus()) {
    for (std::size_t b : q.basepoints()) {
      Pi1Presentation p = pi1_presentation(q, b);
      EXPECT_EQ(p.generator_edges.size(), p.presentation.generator_count);
      for (std::size_t v : p.vertices) {
        EXPECT_EQ(act_word(q, b, p.tree_path[v]), v) << name;
      }
      for (std::size_t g = 0; g < p.presentation.generator_count; ++g) {
        EXPECT_EQ(act_word(q, b, p.loop_word(g, q)), b) << name;
      }
    }
  }
}

TEST(Adj0, Examples) {
  Adj0Enumeration d3 = adj0_enumeration(dihedral(3), 0);
  EXPECT_EQ(d3.size(), 3U);
  std::vector<std::size_t> e = d3.endpoints();
  std::sort(e.begin(), e.end());
  EXPECT_EQ(e, (std::vector<std::size_t>{0, 1, 2}));

  Adj0Enumeration s4 = adj0_enumeration(s4_transpositions(), 0);
  EXPECT_EQ(s4.size(), 12U);
  std::vector<std::size_t> hits(6, 0);
  for (std::size_t x : s4.endpoints()) {
    ++hits[x];
  }
  EXPECT_EQ(hits, std::vector<std::size_t>(6, 2));

  EXPECT_THROW(adj0_enumeration(q_mn(1, 1), 0, kSmallBudget), BudgetExceeded);
}

TEST(Adj0, ElementsHaveDegreeZeroAndFormAGroup) {
  for (FiniteQuandle const& q : {s4_transpositions(), dihedral(5),
                                 alexander_cyclic(7, 3), tetrahedral()}) {
    Adj0Enumeration en = adj0_enumeration(q, 0);
    for (std::size_t c = 0; c < en.size(); ++c) {
      Word w = en.element_word(c);
      EXPECT_EQ(w.degree(), 0);
      EXPECT_EQ(en.coset_of(w), c);
      EXPECT_EQ(act_word(q, en.basepoint(), w), en.endpoint(c));
      EXPECT_EQ(en.multiply(c, en.inverse(c)), 0U);
      EXPECT_EQ(en.multiply(0, c), c);
      for (std::size_t d = 0; d < en.size(); ++d) {
        for (std::size_t f = 0; f < en.size(); f += 3) {
          EXPECT_EQ(en.multiply(en.multiply(c, d), f),
                    en.multiply(c, en.multiply(d, f)));
        }
      }
    }
  }
}

TEST(Adj0, CosetCountIsComponentSizeTimesPi1Order) {
  for (auto const& [name, q] : finite_corpus()) {
    for (std::size_t i = 0; i < q.component_count(); ++i) {
      FundamentalGroup g = fundamental_group(q, q.basepoint(i));
      ASSERT_TRUE(g.order()) << name;
      EXPECT_EQ(g.enumeration->size(),
                q.components().parts[i].size() * *g.order())
          << name;
    }
  }
}

TEST(Adj0, KernelOfTheActionIsCentral) {
  for (auto const& [name, q] : finite_corpus()) {
    if (!q.is_connected()) {
      continue;
    }
    Adj0Enumeration en = adj0_enumeration(q, 0);
    for (std::size_t c = 0; c < en.size(); ++c) {
      Word w         = en.element_word(c);
      bool acts_trivially = true;
      for (std::size_t x = 0; x < q.size() && acts_trivially; ++x) {
        acts_trivially = act_word(q, x, w) == x;
      }
      if (!acts_trivially) {
        continue;
      }
      for (std::size_t d = 0; d < en.size(); ++d) {
        EXPECT_EQ(en.multiply(c, d), en.multiply(d, c)) << name;
      }
      // also central against the degree-one generator x_q
      Word conj = Word{letter(0, true)} * w * Word{letter(0)};
      EXPECT_EQ(en.coset_of(conj), c) << name;
    }
  }
}

TEST(FundamentalGroup, Examples) {
  FundamentalGroup d7 = fundamental_group(dihedral(7), 0);
  EXPECT_EQ(d7.order(), 1U);
  EXPECT_TRUE(d7.abelian.is_trivial());

  FundamentalGroup s5 = fundamental_group(s5_transpositions(), 0);
  ASSERT_EQ(s5.order(), 6U);
  EXPECT_FALSE(s5.finite_form->is_abelian());
  EXPECT_EQ(s5.abelian, (AbelianInvariants{0, {Integer(2)}}));
  EXPECT_EQ(s5.presentation_order, 6U);

  FundamentalGroup q22 = fundamental_group(q_mn(2, 2), 0, kSmallBudget);
  EXPECT_FALSE(q22.finite_form);
  ASSERT_TRUE(q22.budget_failure);
  EXPECT_EQ(q22.abelian, (AbelianInvariants{1, {Integer(2)}}));
}

TEST(FundamentalGroup, PipelinesAgreeOnOrder) {
  for (auto const& [name, q] : finite_corpus()) {
    for (std::size_t b : q.basepoints()) {
      FundamentalGroup g = fundamental_group(q, b);
      ASSERT_TRUE(g.order()) << name;
      if (g.presentation_order) {
        EXPECT_EQ(*g.presentation_order, *g.order()) << name;
      }
      EXPECT_EQ(g.elements.front(), 0U);
      if (g.finite_form->is_abelian()) {
        EXPECT_EQ(g.abelian.order(), Integer(*g.order())) << name;
      }
    }
  }
}

TEST(FundamentalGroup, AbelianInvariantsDoNotDependOnTheBasepoint) {
  for (auto const& [name, q] : full_corpus()) {
    for (auto const& part : q.components().parts) {
      AbelianInvariants first = abelian_invariants(
          pi1_presentation(q, part.front()).presentation);
      for (std::size_t b : part) {
        EXPECT_EQ(abelian_invariants(pi1_presentation(q, b).presentation),
                  first)
            << name << " at " << b;
      }
    }
  }
}

TEST(UniversalCover, Examples) {
  UniversalCover d3 = universal_cover(dihedral(3));
  EXPECT_EQ(d3.cover().size(), 3U);
  for (auto const& f : d3.projection.fibres()) {
    EXPECT_EQ(f.size(), 1U);
  }

  UniversalCover s4 = universal_cover(s4_transpositions());
  EXPECT_EQ(s4.cover().size(), 12U);
  for (auto const& f : s4.projection.fibres()) {
    EXPECT_EQ(f.size(), 2U);
  }

  EXPECT_THROW(universal_cover(trivial(2), kSmallBudget), BudgetExceeded);
}

TEST(UniversalCover, AxiomsOverFiniteCorpus) {
  for (auto const& [name, q] : finite_corpus()) {
    UniversalCover u = universal_cover(q);
    FiniteQuandle const& e = u.cover();
    EXPECT_TRUE(is_covering(u.projection)) << name;
    EXPECT_TRUE(naive_is_covering(e, q, u.projection.map())) << name;
    auto const parts = e.components().parts;
    EXPECT_EQ(parts.size(), q.component_count()) << name;
    auto fibres = u.projection.fibres();
    for (CoverPiece const& p : u.pieces) {
      std::size_t const base = q.basepoint(p.component);
      auto const&       fibre = fibres[base];
      EXPECT_EQ(fibre.size(), p.deck.order()) << name;
      std::set<std::size_t> reached;
      for (std::size_t k = 0; k < p.deck_perms.size(); ++k) {
        Perm const& d = p.deck_perms[k];
        reached.insert(d[u.base_lift(p.component)]);
        for (std::size_t x = p.offset; x < p.offset + p.enumeration.size();
             ++x) {
          if (k != 0) {
            EXPECT_NE(d[x], x) << name;
          }
          EXPECT_EQ(u.projection(d[x]), u.projection(x)) << name;
          for (std::size_t y = 0; y < e.size(); ++y) {
            EXPECT_EQ(d[e.op(x, y)], e.op(d[x], y)) << name;
          }
        }
      }
      EXPECT_EQ(reached, std::set<std::size_t>(fibre.begin(), fibre.end()))
          << name;
    }
  }
}

TEST(Monodromy, TrivialCoveringActsTrivially) {
  Monodromy m = monodromy(trivial_covering(dihedral(3), 3), 0);
  EXPECT_EQ(m.fibre.size(), 3U);
  for (Perm const& p : m.action) {
    EXPECT_TRUE(p.is_identity());
  }
}

TEST(Monodromy, UniversalCoverIsFreeAndTransitive) {
  FiniteQuandle    q   = s4_transpositions();
  FundamentalGroup pi1 = fundamental_group(q, 0);
  Monodromy        m   = monodromy(universal_cover(q).projection, pi1);
  ASSERT_EQ(m.action.size(), 2U);
  EXPECT_TRUE(m.action[0].is_identity());
  EXPECT_EQ(m.action[1][0], 1U);
  EXPECT_EQ(m.stabilizer(0), (std::vector<std::size_t>{0}));
}

TEST(Monodromy, IsAHomomorphism) {
  FiniteQuandle    q   = s5_transpositions();
  FundamentalGroup pi1 = fundamental_group(q, 0);
  Monodromy        m   = monodromy(universal_cover(q).projection, pi1);
  for (std::size_t i = 0; i < pi1.elements.size(); ++i) {
    for (std::size_t j = 0; j < pi1.elements.size(); ++j) {
      EXPECT_EQ(m.action[pi1.multiply(i, j)], m.action[i] * m.action[j]);
    }
  }
}

TEST(Monodromy, RefusesInfiniteFundamentalGroup) {
  EXPECT_THROW(monodromy(reduction(8, 4), 0, kSmallBudget), BudgetExceeded);
}

TEST(Lifting, FromTheOnePointQuandle) {
  FiniteQuandle  q = s4_transpositions();
  UniversalCover u = universal_cover(q);
  QuandleHom     f(trivial(1), q, {0});
  auto const     fibres = u.projection.fibres();
  for (std::size_t lift : fibres[0]) {
    LiftResult r = check_lifting(f, 0, u.projection, lift);
    ASSERT_TRUE(r);
    EXPECT_EQ((*r.lift)(0), lift);
  }
}

TEST(Lifting, IdentityDoesNotLiftToTheUniversalCover) {
  FiniteQuandle  q = s4_transpositions();
  UniversalCover u = universal_cover(q);
  LiftResult     r =
      check_lifting(QuandleHom::identity(q), 0, u.projection, u.base_lift(0));
  ASSERT_FALSE(r);
  auto const& [w1, w2] = r.witness;
  EXPECT_EQ(act_word(q, 0, w1), act_word(q, 0, w2));
  // the same words acting through lifts of the generators disagree upstairs
  auto const fibres = u.projection.fibres();
  auto lifted = [&](Word const& w) {
    std::size_t y = u.base_lift(0);
    for (Letter l : w.letters()) {
      std::size_t s = fibres[generator_of(l)].front();
      y = is_inverse(l) ? u.cover().inv_op(y, s) : u.cover().op(y, s);
    }
    return y;
  };
  EXPECT_NE(lifted(w1), lifted(w2));
}

TEST(Lifting, ProjectionLiftsToTheIdentity) {
  UniversalCover u = universal_cover(s4_transpositions());
  LiftResult     r =
      check_lifting(u.projection, u.base_lift(0), u.projection, u.base_lift(0));
  ASSERT_TRUE(r);
  for (std::size_t x = 0; x < u.cover().size(); ++x) {
    EXPECT_EQ((*r.lift)(x), x);
  }
}

TEST(Coverings, Counts) {
  EXPECT_EQ(enumerate_connected_coverings(dihedral(3), 0).coverings.size(), 1U);
  EXPECT_EQ(
      enumerate_connected_coverings(s4_transpositions(), 0).coverings.size(),
      2U);
  EXPECT_EQ(
      enumerate_connected_coverings(s5_transpositions(), 0).coverings.size(),
      6U);
  EXPECT_THROW(enumerate_connected_coverings(trivial(2), 0), InvalidArgument);
}

TEST(Coverings, GaloisCorrespondence) {
  for (FiniteQuandle const& q :
       {s4_transpositions(), s5_transpositions(), dihedral(5), tetrahedral()}) {
    CoveringEnumeration en = enumerate_connected_coverings(q, 0);
    std::size_t const   order = *en.pi1.order();
    for (ConnectedCovering const& c : en.coverings) {
      EXPECT_TRUE(is_covering(c.covering));
      EXPECT_TRUE(c.covering.source().is_connected());
      EXPECT_EQ(c.fibre * c.subgroup.size(), order);
      EXPECT_EQ(c.covering.fibres()[0].size(), c.fibre);
      EXPECT_EQ(c.galois, is_normal(*en.pi1.finite_form, c.subgroup));
      // the image of pi_1 of the covering is the stabilizer of its base lift
      Monodromy m  = monodromy(c.covering, en.pi1);
      auto      it = std::find(m.fibre.begin(), m.fibre.end(), c.base_lift);
      ASSERT_NE(it, m.fibre.end());
      EXPECT_EQ(m.stabilizer(static_cast<std::size_t>(it - m.fibre.begin())),
                c.subgroup);
    }
  }
}
