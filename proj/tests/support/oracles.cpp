#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace quandelier::testing {

  bool naive_is_quandle(SquareTable const& t) {
    std::size_t const n = t.size();
    for (std::size_t a = 0; a < n; ++a) {
      if (t(a, a) != a) {
        return false;
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::set<std::size_t> column;
      for (std::size_t a = 0; a < n; ++a) {
        column.insert(t(a, b));
      }
      if (column.size() != n) {
        return false;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (t(t(a, b), c) != t(t(a, c), t(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<std::vector<std::size_t>>
  naive_components(FiniteQuandle const& q) {
    std::size_t const        n = q.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        parent[find(q.op(a, b))] = find(a);
      }
    }
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t>              slot(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t r = find(a);
      if (slot[r] == n) {
        slot[r] = parts.size();
        parts.emplace_back();
      }
      parts[slot[r]].push_back(a);
    }
    return parts;
  }

  std::size_t naive_group_order(std::vector<Perm> const& generators,
                                std::size_t              degree) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> todo;
    std::vector<std::size_t>           id(degree);
    std::iota(id.begin(), id.end(), std::size_t{0});
    seen.insert(id);
    todo.push_back(id);
    while (!todo.empty()) {
      auto x = todo.back();
      todo.pop_back();
      for (Perm const& g : generators) {
        std::vector<std::size_t> y(degree);
        for (std::size_t i = 0; i < degree; ++i) {
          y[i] = g[x[i]];
        }
        if (seen.insert(y).second) {
          todo.push_back(y);
        }
      }
    }
    return seen.size();
  }

  std::size_t naive_subgroup_count(FiniteGroup const& g) {
    std::size_t const n = g.order();
    std::size_t       count = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
      if (!(mask & 1U)) {
        continue;  // must contain the identity (element 0)
      }
      bool closed = true;
      for (std::size_t i = 0; i < n && closed; ++i) {
        if (!((mask >> i) & 1U)) {
          continue;
        }
        for (std::size_t j = 0; j < n && closed; ++j) {
          if ((mask >> j) & 1U) {
            Perm p = g.element(i) * g.element(j);
            std::size_t k = 0;
            while (!(g.element(k) == p)) {
              ++k;
            }
            closed = (mask >> k) & 1U;
          }
        }
      }
      count += closed ? 1 : 0;
    }
    return count;
  }

  namespace {
    Integer det(std::vector<std::vector<Integer>> m) {
      std::size_t const n = m.size();
      if (n == 0) {
        return 1;
      }
      if (n == 1) {
        return m[0][0];
      }
      Integer d = 0;
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t r = 1; r < n; ++r) {
          std::vector<Integer> row;
          for (std::size_t k = 0; k < n; ++k) {
            if (k != c) {
              row.push_back(m[r][k]);
            }
          }
          minor.push_back(std::move(row));
        }
        Integer term = m[0][c] * det(std::move(minor));
        d += (c % 2 == 0) ? term : Integer(-term);
      }
      return d;
    }

    Integer gcd(Integer a, Integer b) {
      if (a < 0) a = -a;
      if (b < 0) b = -b;
      while (b != 0) {
        Integer t = a % b;
        a         = b;
        b         = t;
      }
      return a;
    }

    void subsets(std::size_t n, std::size_t k, std::size_t start,
                 std::vector<std::size_t>&                 current,
                 std::vector<std::vector<std::size_t>>& out) {
      if (current.size() == k) {
        out.push_back(current);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        current.push_back(i);
        subsets(n, k, i + 1, current, out);
        current.pop_back();
      }
    }
  }  // namespace

  std::vector<Integer> naive_invariant_factors(Matrix<long long> const& m) {
    std::vector<Integer> divisors{1};  // d_0
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
      std::vector<std::vector<std::size_t>> rows, cols;
      std::vector<std::size_t>              cur;
      subsets(m.rows(), k, 0, cur, rows);
      subsets(m.cols(), k, 0, cur, cols);
      Integer g = 0;
      for (auto const& r : rows) {
        for (auto const& c : cols) {
          std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
              minor[i][j] = m(r[i], c[j]);
            }
          }
          g = gcd(g, det(std::move(minor)));
        }
      }
      if (g == 0) {
        break;
      }
      divisors.push_back(g);
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k < divisors.size(); ++k) {
      out.push_back(divisors[k] / divisors[k - 1]);
    }
    return out;
  }

  bool naive_is_covering(FiniteQuandle const& src, FiniteQuandle const& dst,
                         std::vector<std::size_t> const& map) {
    std::set<std::size_t> image(map.begin(), map.end());
    if (image.size() != dst.size()) {
      return false;
    }
    for (std::size_t x = 0; x < src.size(); ++x) {
      for (std::size_t y = 0; y < src.size(); ++y) {
        if (map[x] != map[y]) {
          continue;
        }
        for (std::size_t a = 0; a < src.size(); ++a) {
          if (src.op(a, x) != src.op(a, y)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    // calls visit(values) for every cochain with identity diagonal
    template <typename Visit>
    void for_each_cochain(FiniteQuandle const& q, GroupTable const& g,
                          Visit&& visit) {
      std::size_t const        n = q.size();
      std::vector<std::size_t> v(n * n, g.identity());
      std::vector<std::size_t> free;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b) {
            free.push_back(a * n + b);
          }
        }
      }
      std::vector<std::size_t> digits(free.size(), 0);
      for (;;) {
        for (std::size_t i = 0; i < free.size(); ++i) {
          v[free[i]] = digits[i];
        }
        visit(v);
        std::size_t i = 0;
        while (i < digits.size() && digits[i] + 1 == g.order()) {
          digits[i++] = 0;
        }
        if (i == digits.size()) {
          return;
        }
        ++digits[i];
      }
    }

    bool law(FiniteQuandle const& q, GroupTable const& g,
             std::vector<std::size_t> const& v) {
      std::size_t const n = q.size();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (g.multiply(v[a * n + b], v[q.op(a, b) * n + c])
                != g.multiply(v[a * n + c],
                              v[q.op(a, c) * n + q.op(b, c)])) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  std::size_t naive_cocycle_count(FiniteQuandle const& q,
                                  GroupTable const&    g) {
    std::size_t count = 0;
    for_each_cochain(q, g, [&](auto const& v) { count += law(q, g, v); });
    return count;
  }

  std::size_t naive_coboundary_count(FiniteQuandle const& q,
                                     GroupTable const&    g) {
    std::size_t const                  n = q.size();
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t>           h(n, 0);
    for (;;) {
      std::vector<std::size_t> v(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          v[a * n + b] = g.multiply(g.inverse(h[a]), h[q.op(a, b)]);
        }
      }
      seen.insert(v);
      std::size_t i = 0;
      while (i < n && h[i] + 1 == g.order()) {
        h[i++] = 0;
      }
      if (i == n) {
        break;
      }
      ++h[i];
    }
    return seen.size();
  }

  std::optional<std::vector<std::size_t>>
  naive_cohomologous(FiniteQuandle const& q, GroupTable const& g,
                     Cocycle2 const& f, Cocycle2 const& f_prime) {
    std::size_t const        n = q.size();
    std::vector<std::size_t> h(n, 0);
    for (;;) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          ok = f(a, b)
               == g.multiply(g.multiply(g.inverse(h[a]), f_prime(a, b)),
                             h[q.op(a, b)]);
        }
      }
      if (ok) {
        return h;
      }
      std::size_t i = 0;
      while (i < n && h[i] + 1 == g.order()) {
        h[i++] = 0;
      }
      if (i == n) {
        return std::nullopt;
      }
      ++h[i];
    }
  }

}  // namespace quandelier::testing
