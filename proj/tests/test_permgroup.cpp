#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "quandelier/error.hpp"
#include "quandelier/perm_group.hpp"
#include "quandelier/quandle.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace quandelier;
using namespace quandelier::testing;

namespace {

  std::vector<Perm> inner_generators(FiniteQuandle const& q) {
    std::vector<Perm> gens;
    for (std::size_t a = 0; a < q.size(); ++a) {
      gens.push_back(q.right_translation(a));
    }
    return gens;
  }

  FiniteGroup dihedral_group_of_square() {
    std::size_t const rot[] = {0, 1, 2, 3};
    return closure(std::vector<Perm>{cycle(4, rot), transposition(4, 1, 3)},
                   4, 100);
  }

}  // namespace

TEST(Perm, RejectsNonBijection) {
  EXPECT_THROW(Perm({0, 0}), InvalidArgument);
  EXPECT_THROW(Perm({0, 2}), InvalidArgument);
  EXPECT_NO_THROW(Perm({1, 0}));
}

TEST(Perm, ProductAppliesLeftFactorFirst) {
  Perm a({1, 2, 0});
  Perm b({1, 0, 2});
  Perm ab = a * b;
  for (Point x = 0; x < 3; ++x) {
    EXPECT_EQ(ab[x], b[a[x]]);
  }
  EXPECT_TRUE((a * a.inverse()).is_identity());
}

TEST(Closure, TranspositionGeneratesOrderTwo) {
  FiniteGroup g = closure(std::vector<Perm>{transposition(2, 0, 1)}, 2, 10);
  EXPECT_EQ(g.order(), 2U);
  EXPECT_TRUE(g.element(0).is_identity());
}

TEST(Closure, InnerMapsOfDihedral3GenerateOrderSix) {
  FiniteGroup g = closure(inner_generators(dihedral(3)), 3, 100);
  EXPECT_EQ(g.order(), 6U);
}

TEST(Closure, EmptyGeneratorSetGivesTrivialGroup) {
  FiniteGroup g = closure(std::vector<Perm>{}, 3, 10);
  EXPECT_EQ(g.order(), 1U);
  EXPECT_EQ(g.degree(), 3U);
}

TEST(Closure, BudgetIsEnforced) {
  try {
    closure(inner_generators(dihedral(5)), 5, 4);
    FAIL() << "expected BudgetExceeded";
  } catch (BudgetExceeded const& e) {
    EXPECT_EQ(e.reached(), 5U);
  }
  EXPECT_THROW(closure(std::vector<Perm>{}, 3, 0), InvalidArgument);
  EXPECT_THROW(closure(std::vector<Perm>{Perm::identity(2)}, 3, 5),
               InvalidArgument);
}

TEST(Closure, OrdersAgreeWithNaiveClosure) {
  for (auto const& [name, q] : constructor_corpus()) {
    auto gens = inner_generators(q);
    EXPECT_EQ(closure(gens, q.size(), 100000).order(),
              naive_group_order(gens, q.size()))
        << name;
  }
}

TEST(Closure, IsIdempotent) {
  for (auto const& [name, q] : constructor_corpus()) {
    FiniteGroup g  = closure(inner_generators(q), q.size(), 100000);
    FiniteGroup g2 = closure(g.elements(), q.size(), 100000);
    EXPECT_EQ(g.order(), g2.order()) << name;
  }
}

TEST(Closure, GroupIsClosedAndGenerated) {
  FiniteGroup g = symmetric_group(4);
  ASSERT_EQ(g.order(), 24U);
  for (std::size_t i = 0; i < g.order(); ++i) {
    EXPECT_TRUE(g.contains(g.element(i).inverse()));
    for (std::size_t j = 0; j < g.order(); ++j) {
      EXPECT_TRUE(g.contains(g.element(i) * g.element(j)));
    }
  }
}

TEST(FromElements, AcceptsClosedListsOnly) {
  Perm s = transposition(3, 0, 1);
  EXPECT_EQ(FiniteGroup::from_elements({Perm::identity(3), s}, {1}).order(),
            2U);
  EXPECT_THROW(FiniteGroup::from_elements({s, Perm::identity(3)}, {0}),
               InvalidArgument);
  std::size_t const c[] = {0, 1, 2};
  EXPECT_THROW(FiniteGroup::from_elements({Perm::identity(3), cycle(3, c)}, {1}),
               InvalidArgument);
  EXPECT_THROW(FiniteGroup::from_elements({Perm::identity(3), s}, {}),
               InvalidArgument);
}

TEST(Orbits, DihedralThreeIsTransitive) {
  FiniteGroup g = closure(inner_generators(dihedral(3)), 3, 100);
  auto        o = orbits(g);
  ASSERT_EQ(o.size(), 1U);
  EXPECT_EQ(o[0], (std::vector<Point>{0, 1, 2}));
}

TEST(Orbits, TrivialGroupGivesSingletons) {
  FiniteGroup g = closure(std::vector<Perm>{}, 2, 10);
  EXPECT_EQ(orbits(g), (std::vector<std::vector<Point>>{{0}, {1}}));
}

TEST(Orbits, Q22HasTwoOrbitsOfSizeTwo) {
  FiniteQuandle q = q_mn(2, 2);
  FiniteGroup   g = closure(inner_generators(q), 4, 100);
  EXPECT_EQ(orbits(g), (std::vector<std::vector<Point>>{{0, 1}, {2, 3}}));
}

TEST(Orbits, MatchQuandleComponentsOnCorpus) {
  for (auto const& [name, q] : full_corpus()) {
    FiniteGroup g = closure(inner_generators(q), q.size(), 100000);
    EXPECT_EQ(orbits(g), q.components().parts) << name;
    EXPECT_EQ(naive_components(q), q.components().parts) << name;
  }
}

TEST(Subgroups, SmallCounts) {
  EXPECT_EQ(subgroups(closure(std::vector<Perm>{transposition(2, 0, 1)}, 2, 10),
                      100)
                .size(),
            2U);
  EXPECT_EQ(subgroups(symmetric_group(3), 100).size(), 6U);
  EXPECT_EQ(subgroups(closure(std::vector<Perm>{}, 1, 10), 100).size(), 1U);
}

TEST(Subgroups, SymmetricThreeLattice) {
  auto sets = subgroup_index_sets(symmetric_group(3), 100);
  std::vector<std::size_t> sizes;
  for (auto const& s : sets) {
    sizes.push_back(s.size());
  }
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 2, 2, 3, 6}));
}

TEST(Subgroups, AgreeWithSubsetSearch) {
  std::size_t const four[] = {0, 1, 2, 3};
  std::vector<FiniteGroup> groups{
      symmetric_group(3), dihedral_group_of_square(),
      closure(std::vector<Perm>{cycle(4, four)}, 4, 10),
      alternating_group(4),
      closure(std::vector<Perm>{transposition(4, 0, 1), transposition(4, 2, 3)},
              4, 10)};
  for (FiniteGroup const& g : groups) {
    auto sets = subgroup_index_sets(g, 1000);
    EXPECT_EQ(sets.size(), naive_subgroup_count(g)) << g.order();
    for (auto const& s : sets) {
      for (std::size_t i : s) {
        for (std::size_t j : s) {
          EXPECT_TRUE(std::binary_search(s.begin(), s.end(), g.product(i, j)));
        }
      }
    }
  }
}

TEST(Subgroups, PrimeCyclicGroupsHaveTwo) {
  for (std::size_t p : {2U, 3U, 5U, 7U, 11U}) {
    std::vector<std::size_t> pts(p);
    std::iota(pts.begin(), pts.end(), std::size_t{0});
    FiniteGroup g = closure(std::vector<Perm>{cycle(p, pts)}, p, 100);
    EXPECT_EQ(subgroups(g, 100).size(), 2U) << p;
  }
}

TEST(Subgroups, OrderedByOrderThenMembers) {
  auto sets = subgroup_index_sets(symmetric_group(4), 2000);
  EXPECT_EQ(sets.size(), 30U);
  EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end(), [](auto& a, auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }));
  EXPECT_THROW(subgroup_index_sets(symmetric_group(4), 10), BudgetExceeded);
}

TEST(IsCentral, Examples) {
  FiniteGroup s3 = symmetric_group(3);
  EXPECT_TRUE(is_central(Perm::identity(3), s3));
  EXPECT_FALSE(is_central(transposition(3, 0, 1), s3));
  std::size_t const half[] = {0, 2};
  std::size_t const other[] = {1, 3};
  Perm rot2 = cycle(4, half) * cycle(4, other);
  EXPECT_TRUE(is_central(rot2, dihedral_group_of_square()));
}

TEST(IsNormal, SymmetricThree) {
  FiniteGroup s3   = symmetric_group(3);
  auto        sets = subgroup_index_sets(s3, 100);
  std::vector<bool> normal;
  for (auto const& s : sets) {
    normal.push_back(is_normal(s3, s));
  }
  EXPECT_EQ(normal, (std::vector<bool>{true, false, false, false, true, true}));
}

TEST(InnerConjugation, InnOfImageIsConjugate) {
  for (auto const& [name, q] : constructor_corpus()) {
    FiniteGroup inn = closure(inner_generators(q), q.size(), 100000);
    for (Perm const& phi : inn.elements()) {
      for (std::size_t a = 0; a < q.size(); ++a) {
        EXPECT_EQ(q.right_translation(phi[a]),
                  phi.inverse() * q.right_translation(a) * phi)
            << name;
      }
    }
  }
}
