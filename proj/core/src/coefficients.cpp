#include <algorithm>
#include <numeric>

#include "quandelier/cohomology.hpp"
#include "quandelier/error.hpp"

namespace quandelier {

  void GroupTable::finish() {
    std::size_t const n = mul_.size();
    inverse_.assign(n, n);
    abelian_ = true;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (mul_(x, y) == identity_) {
          inverse_[x] = y;
        }
        if (mul_(x, y) != mul_(y, x)) {
          abelian_ = false;
        }
      }
    }
  }

  GroupTable GroupTable::cyclic(std::size_t d) {
    return abelian({d});
  }

  GroupTable GroupTable::abelian(std::vector<std::size_t> factors) {
    std::size_t order = 1;
    for (std::size_t d : factors) {
      if (d == 0) {
        throw InvalidArgument("GroupTable: factors must be positive");
      }
      order *= d;
    }
    GroupTable g;
    g.factors_     = std::move(factors);
    g.has_factors_ = true;
    g.mul_         = SquareTable(order);
    g.identity_    = 0;
    for (std::size_t x = 0; x < order; ++x) {
      auto ex = g.exponents(x);
      for (std::size_t y = 0; y < order; ++y) {
        auto ey = g.exponents(y);
        for (std::size_t i = 0; i < ex.size(); ++i) {
          ey[i] = (ex[i] + ey[i]) % g.factors_[i];
        }
        g.mul_(x, y) = g.from_exponents(ey);
      }
    }
    g.finish();
    return g;
  }

  GroupTable GroupTable::from_table(SquareTable mul, std::size_t identity) {
    std::size_t const n = mul.size();
    if (n == 0 || identity >= n) {
      throw InvalidArgument("GroupTable: empty table or identity out of range");
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<bool> row(n, false), col(n, false);
      for (std::size_t y = 0; y < n; ++y) {
        if (mul(x, y) >= n) {
          throw InvalidArgument("GroupTable: entry out of range");
        }
        row[mul(x, y)] = true;
        col[mul(y, x)] = true;
      }
      if (std::count(row.begin(), row.end(), true) != static_cast<long>(n)
          || std::count(col.begin(), col.end(), true)
                 != static_cast<long>(n)) {
        throw InvalidArgument("GroupTable: table is not a Latin square");
      }
      if (mul(identity, x) != x || mul(x, identity) != x) {
        throw InvalidArgument("GroupTable: identity does not act trivially");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw InvalidArgument("GroupTable: table is not associative");
          }
        }
      }
    }
    GroupTable g;
    g.mul_      = std::move(mul);
    g.identity_ = identity;
    g.finish();
    return g;
  }

  GroupTable GroupTable::from_group(FiniteGroup const& group) {
    SquareTable mul(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) {
      for (std::size_t j = 0; j < group.order(); ++j) {
        mul(i, j) = group.product(i, j);
      }
    }
    GroupTable g;
    g.mul_      = std::move(mul);
    g.identity_ = group.identity_index();
    g.finish();
    return g;
  }

  std::vector<std::size_t> GroupTable::exponents(std::size_t x) const {
    if (!has_factors_) {
      throw InvalidArgument("GroupTable: no invariant factors");
    }
    std::vector<std::size_t> e(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      e[i] = x % factors_[i];
      x /= factors_[i];
    }
    return e;
  }

  std::size_t
  GroupTable::from_exponents(std::span<std::size_t const> e) const {
    if (!has_factors_ || e.size() != factors_.size()) {
      throw InvalidArgument("GroupTable: exponent tuple has the wrong length");
    }
    std::size_t x = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= factors_[i]) {
        throw InvalidArgument("GroupTable: exponent out of range");
      }
      x = x * factors_[i] + e[i];
    }
    return x;
  }

  AbelianInvariants GroupTable::invariants() const {
    if (!abelian_) {
      throw InvalidArgument("GroupTable: group is not abelian");
    }
    if (has_factors_) {
      std::vector<Integer> orders(factors_.begin(), factors_.end());
      return AbelianInvariants::from_cyclic_orders(std::move(orders));
    }
    // multiplication-table presentation
    Presentation p{order(), {}};
    for (std::size_t x = 0; x < order(); ++x) {
      for (std::size_t y = 0; y < order(); ++y) {
        p.relators.push_back(
            Word{letter(x), letter(y), letter(multiply(x, y), true)});
      }
    }
    return abelian_invariants(p);
  }

  std::vector<std::size_t> GroupTable::regular_index() const {
    std::vector<std::size_t> index(order());
    std::size_t              next = 1;
    for (std::size_t x = 0; x < order(); ++x) {
      index[x] = x == identity_ ? 0 : next++;
    }
    return index;
  }

  FiniteGroup GroupTable::regular_representation() const {
    auto const        index = regular_index();
    std::vector<Perm> perms(order());
    for (std::size_t g = 0; g < order(); ++g) {
      std::vector<Point> images(order());
      for (std::size_t x = 0; x < order(); ++x) {
        images[index[x]] = index[multiply(x, g)];
      }
      perms[index[g]] = Perm(std::move(images));
    }
    std::vector<std::size_t> gens;
    for (std::size_t i = 1; i < order(); ++i) {
      gens.push_back(i);
    }
    return FiniteGroup::from_elements(std::move(perms), std::move(gens));
  }

  Coefficients Coefficients::uniform(FiniteQuandle const& q,
                                     GroupTable const&    g) {
    return {std::vector<GroupTable>(q.component_count(), g)};
  }

  bool Coefficients::is_abelian() const {
    return std::all_of(groups.begin(), groups.end(),
                       [](GroupTable const& g) { return g.is_abelian(); });
  }

}  // namespace quandelier
