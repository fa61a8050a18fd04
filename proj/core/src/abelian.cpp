#include <algorithm>
#include <set>

#include <boost/integer/common_factor.hpp>

#include "quandelier/error.hpp"
#include "quandelier/fp_group.hpp"

namespace quandelier {

  Integer AbelianInvariants::order() const {
    Integer n = 1;
    for (Integer const& d : torsion) {
      n *= d;
    }
    return n;
  }

  AbelianInvariants
  AbelianInvariants::from_cyclic_orders(std::vector<Integer> orders) {
    AbelianInvariants    out;
    std::vector<Integer> finite;
    for (Integer& d : orders) {
      if (d < 0) {
        d = -d;
      }
      if (d == 0) {
        ++out.free_rank;
      } else if (d > 1) {
        finite.push_back(d);
      }
    }
    IntMatrix diag(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) {
      diag(i, i) = finite[i];
    }
    for (Integer const& d : elementary_divisors(diag)) {
      if (d > 1) {
        out.torsion.push_back(d);
      }
    }
    return out;
  }

  std::string to_string(AbelianInvariants const& a) {
    std::string s = "rank " + std::to_string(a.free_rank) + " torsion";
    if (a.torsion.empty()) {
      return s + " -";
    }
    for (Integer const& d : a.torsion) {
      s += " " + d.str();
    }
    return s;
  }

  Presentation adjoint_presentation(FiniteQuandle const& q) {
    Presentation p{q.size(), {}};
    std::set<std::vector<Letter>> seen;
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t b = 0; b < q.size(); ++b) {
        if (a == b) {
          continue;
        }
        Word r{letter(b, true), letter(a), letter(b), letter(q.op(a, b), true)};
        r = r.normalized();
        if (!r.empty() && seen.insert(r.letters()).second) {
          p.relators.push_back(std::move(r));
        }
      }
    }
    return p;
  }

  Matrix<long long> relation_matrix(Presentation const& p) {
    Matrix<long long> m(p.relators.size(), p.generator_count);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      auto sums = p.relators[r].exponent_sums(p.generator_count);
      for (std::size_t g = 0; g < p.generator_count; ++g) {
        m(r, g) = sums[g];
      }
    }
    return m;
  }

  AbelianInvariants abelian_invariants(Presentation const& p) {
    p.check();
    auto const        divisors = elementary_divisors(relation_matrix(p));
    AbelianInvariants out;
    out.free_rank = p.generator_count - divisors.size();
    for (Integer const& d : divisors) {
      if (d > 1) {
        out.torsion.push_back(d);
      }
    }
    return out;
  }

  Integer count_homs_to_abelian(AbelianInvariants const& src,
                                AbelianInvariants const& target) {
    if (!target.is_finite()) {
      throw InvalidArgument("count_homs_to_abelian: target must be finite");
    }
    Integer count = 1;
    Integer const lambda = target.order();
    for (std::size_t i = 0; i < src.free_rank; ++i) {
      count *= lambda;
    }
    for (Integer const& d : src.torsion) {
      for (Integer const& e : target.torsion) {
        count *= boost::integer::gcd(d, e);
      }
    }
    return count;
  }

  AbelianInvariants hom_group(AbelianInvariants const& src,
                              AbelianInvariants const& target) {
    std::vector<Integer> orders;
    // Hom(Z, Z) = Z, Hom(Z, Z_e) = Z_e, Hom(Z_d, Z) = 0,
    // Hom(Z_d, Z_e) = Z_gcd(d, e)
    for (std::size_t i = 0; i < src.free_rank; ++i) {
      for (std::size_t j = 0; j < target.free_rank; ++j) {
        orders.emplace_back(0);
      }
      for (Integer const& e : target.torsion) {
        orders.push_back(e);
      }
    }
    for (Integer const& d : src.torsion) {
      for (Integer const& e : target.torsion) {
        orders.push_back(boost::integer::gcd(d, e));
      }
    }
    return AbelianInvariants::from_cyclic_orders(std::move(orders));
  }

  std::size_t evaluate(Word const&                  w,
                       std::span<std::size_t const> images,
                       FiniteGroup const&           target) {
    std::size_t x = target.identity_index();
    for (Letter l : w.letters()) {
      std::size_t g = images[generator_of(l)];
      x = target.product(x, is_inverse(l) ? target.inverse(g) : g);
    }
    return x;
  }

  std::vector<std::vector<std::size_t>>
  enumerate_homs(Presentation const& p,
                 FiniteGroup const&  target,
                 std::size_t         budget) {
    p.check();
    std::size_t const k     = p.generator_count;
    std::size_t const order = target.order();
    {
      std::size_t total = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / order) {
          throw BudgetExceeded("homomorphism candidates", total * order);
        }
        total *= order;
      }
      if (total > budget) {
        throw BudgetExceeded("homomorphism candidates", total);
      }
    }
    std::vector<std::size_t> mul(order * order), inv(order);
    for (std::size_t i = 0; i < order; ++i) {
      inv[i] = target.inverse(i);
      for (std::size_t j = 0; j < order; ++j) {
        mul[i * order + j] = target.product(i, j);
      }
    }
    // relators grouped by the last generator they mention
    std::vector<std::vector<Word const*>> due(k + 1);
    for (Word const& r : p.relators) {
      std::size_t last = 0;
      for (Letter l : r.letters()) {
        last = std::max(last, generator_of(l) + 1);
      }
      due[last].push_back(&r);
    }
    auto holds = [&](std::vector<std::size_t> const& img, std::size_t level) {
      for (Word const* r : due[level]) {
        std::size_t x = target.identity_index();
        for (Letter l : r->letters()) {
          std::size_t g = img[generator_of(l)];
          x             = mul[x * order + (is_inverse(l) ? inv[g] : g)];
        }
        if (x != target.identity_index()) {
          return false;
        }
      }
      return true;
    };

    std::vector<std::vector<std::size_t>> result;
    std::vector<std::size_t>              img(k, 0);
    if (!holds(img, 0)) {
      return result;
    }
    if (k == 0) {
      result.push_back({});
      return result;
    }
    std::size_t level = 0;
    img[0]            = 0;
    for (;;) {
      bool ok = holds(img, level + 1);
      if (ok && level + 1 == k) {
        result.push_back(img);
      }
      if (ok && level + 1 < k) {
        ++level;
        img[level] = 0;
        continue;
      }
      // advance
      while (img[level] + 1 == order) {
        if (level == 0) {
          return result;
        }
        --level;
      }
      ++img[level];
    }
  }

}  // namespace quandelier
