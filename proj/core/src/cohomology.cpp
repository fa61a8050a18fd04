#include <algorithm>
#include <deque>
#include <map>

#include "quandelier/cohomology.hpp"
#include "quandelier/error.hpp"

namespace quandelier {

  namespace {

    void check_shape(FiniteQuandle const& q, Coefficients const& c,
                     Cocycle2 const& f) {
      if (c.groups.size() != q.component_count()) {
        throw InvalidArgument("coefficients do not match the components");
      }
      if (f.n != q.size() || f.values.size() != q.size() * q.size()) {
        throw InvalidArgument("cochain has the wrong size");
      }
    }

    // |base|^exponent, or budget + 1 if that is larger than budget.
    std::size_t bounded_power(std::size_t base, std::size_t exponent,
                              std::size_t budget) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && total > budget / base) {
          return budget + 1;
        }
        total *= base;
      }
      return total;
    }

  }  // namespace

  Cocycle2 Cocycle2::trivial(FiniteQuandle const& q, Coefficients const& c) {
    Cocycle2 f{q.size(), std::vector<std::size_t>(q.size() * q.size())};
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t b = 0; b < q.size(); ++b) {
        f.at(a, b) = c.at(q.component_of(a)).identity();
      }
    }
    return f;
  }

  CocycleCheck is_cocycle(FiniteQuandle const& q, Coefficients const& c,
                          Cocycle2 const& f) {
    check_shape(q, c, f);
    std::size_t const n = q.size();
    CocycleCheck      out;
    for (std::size_t a = 0; a < n; ++a) {
      GroupTable const& g = c.at(q.component_of(a));
      for (std::size_t b = 0; b < n; ++b) {
        if (f(a, b) >= g.order()) {
          out.failure = CocycleCheck::Failure::out_of_range;
          out.witness = {a, b};
          return out;
        }
      }
      if (f(a, a) != g.identity()) {
        out.failure = CocycleCheck::Failure::diagonal;
        out.witness = {a};
        return out;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      GroupTable const& g = c.at(q.component_of(a));
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t d = 0; d < n; ++d) {
          std::size_t lhs = g.multiply(f(a, b), f(q.op(a, b), d));
          std::size_t rhs =
              g.multiply(f(a, d), f(q.op(a, d), q.op(b, d)));
          if (lhs != rhs) {
            out.failure = CocycleCheck::Failure::law;
            out.witness = {a, b, d};
            return out;
          }
        }
      }
    }
    out.ok = true;
    return out;
  }

  Cocycle2 rescale(FiniteQuandle const& q, Coefficients const& c,
                   Cocycle2 const& f, Cochain1 const& g) {
    check_shape(q, c, f);
    if (g.size() != q.size()) {
      throw InvalidArgument("rescale: cochain has the wrong size");
    }
    Cocycle2 out = f;
    for (std::size_t a = 0; a < q.size(); ++a) {
      GroupTable const& L = c.at(q.component_of(a));
      for (std::size_t b = 0; b < q.size(); ++b) {
        out.at(a, b) = L.multiply(L.multiply(L.inverse(g[a]), f(a, b)),
                                  g[q.op(a, b)]);
      }
    }
    return out;
  }

  Cocycle2 coboundary(FiniteQuandle const& q, Coefficients const& c,
                      Cochain1 const& g) {
    return rescale(q, c, Cocycle2::trivial(q, c), g);
  }

  std::optional<Cochain1>
  are_cohomologous(FiniteQuandle const& q, Coefficients const& c,
                   Cocycle2 const& f, Cocycle2 const& f_prime,
                   std::size_t budget) {
    check_shape(q, c, f);
    check_shape(q, c, f_prime);
    std::size_t const     n     = q.size();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    Cochain1              g(n, kUnset);
    std::size_t           steps = 0;

    for (std::size_t i = 0; i < q.component_count(); ++i) {
      GroupTable const& L    = c.at(i);
      auto const&       part = q.components().parts[i];
      std::size_t const q_i  = q.basepoint(i);
      std::size_t const tries = L.is_abelian() ? 1 : L.order();
      bool              found = false;
      for (std::size_t t = 0; t < tries && !found; ++t) {
        for (std::size_t a : part) {
          g[a] = kUnset;
        }
        g[q_i] = L.is_abelian() ? L.identity() : t;
        std::deque<std::size_t> queue{q_i};
        bool                    ok = true;
        auto assign = [&](std::size_t v, std::size_t value) {
          if (++steps > budget) {
            throw BudgetExceeded("propagations", steps);
          }
          if (g[v] == kUnset) {
            g[v] = value;
            queue.push_back(v);
          } else if (g[v] != value) {
            ok = false;
          }
        };
        while (ok && !queue.empty()) {
          std::size_t u = queue.front();
          queue.pop_front();
          for (std::size_t b = 0; b < n && ok; ++b) {
            // g(u*b) = f'(u,b)^-1 g(u) f(u,b)
            assign(q.op(u, b),
                   L.multiply(L.multiply(L.inverse(f_prime(u, b)), g[u]),
                              f(u, b)));
            // v * b = u:  g(v) = f'(v,b) g(u) f(v,b)^-1
            std::size_t v = q.inv_op(u, b);
            assign(v, L.multiply(L.multiply(f_prime(v, b), g[u]),
                                 L.inverse(f(v, b))));
          }
        }
        if (!ok) {
          continue;
        }
        found = true;
        for (std::size_t a : part) {
          for (std::size_t b = 0; b < n && found; ++b) {
            std::size_t rhs = L.multiply(
                L.multiply(L.inverse(g[a]), f_prime(a, b)), g[q.op(a, b)]);
            found = rhs == f(a, b);
          }
        }
      }
      if (!found) {
        return std::nullopt;
      }
    }
    return g;
  }

  std::pair<Coefficients, Cocycle2>
  pullback_cocycle(QuandleHom const& phi, Coefficients const& c,
                   Cocycle2 const& f) {
    FiniteQuandle const& X = phi.source();
    FiniteQuandle const& Q = phi.target();
    check_shape(Q, c, f);
    Coefficients cx;
    for (std::size_t j = 0; j < X.component_count(); ++j) {
      std::size_t rep = X.components().parts[j].front();
      cx.groups.push_back(c.at(Q.component_of(phi(rep))));
    }
    Cocycle2 out{X.size(), std::vector<std::size_t>(X.size() * X.size())};
    for (std::size_t x = 0; x < X.size(); ++x) {
      for (std::size_t y = 0; y < X.size(); ++y) {
        out.at(x, y) = f(phi(x), phi(y));
      }
    }
    return {std::move(cx), std::move(out)};
  }

  // ---------------------------------------------------------------------

  namespace {
    // drops zero and repeated rows; the row space is unchanged
    Matrix<long long> distinct_rows(Matrix<long long> const& m) {
      std::vector<std::vector<long long>> rows;
      std::map<std::vector<long long>, bool> seen;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<long long> row(m.cols());
        bool                   zero = true;
        for (std::size_t col = 0; col < m.cols(); ++col) {
          row[col] = m(r, col);
          zero     = zero && row[col] == 0;
        }
        if (!zero && seen.emplace(row, true).second) {
          rows.push_back(std::move(row));
        }
      }
      Matrix<long long> out(rows.size(), m.cols());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t col = 0; col < m.cols(); ++col) {
          out(r, col) = rows[r][col];
        }
      }
      return out;
    }
  }  // namespace

  std::vector<AbelianInvariants> h2_integral(FiniteQuandle const& q) {
    PathComplex const              k = build_complex(q);
    std::vector<AbelianInvariants> out;
    for (auto const& part : q.components().parts) {
      Matrix<long long> const d1 = k.boundary1(part);
      Matrix<long long> const d2 = distinct_rows(k.boundary2(part));
      std::size_t const rank1    = elementary_divisors(d1).size();
      auto const        divisors = elementary_divisors(d2);
      AbelianInvariants h;
      h.free_rank = d1.rows() - rank1 - divisors.size();
      for (Integer const& d : divisors) {
        if (d > 1) {
          h.torsion.push_back(d);
        }
      }
      out.push_back(std::move(h));
    }
    return out;
  }

  std::vector<H2Component> h2_with_coefficients(FiniteQuandle const& q,
                                                Coefficients const&  c) {
    if (c.groups.size() != q.component_count()) {
      throw InvalidArgument("coefficients do not match the components");
    }
    std::vector<H2Component> out;
    for (std::size_t i = 0; i < q.component_count(); ++i) {
      GroupTable const& L = c.at(i);
      if (!L.is_abelian()) {
        throw InvalidArgument("h2_with_coefficients: coefficients not abelian");
      }
      H2Component h;
      h.pi1_abelian = abelian_invariants(
          pi1_presentation(q, q.basepoint(i)).presentation);
      AbelianInvariants const lambda = L.invariants();
      h.group   = hom_group(h.pi1_abelian, lambda);
      h.classes = count_homs_to_abelian(h.pi1_abelian, lambda);
      out.push_back(std::move(h));
    }
    return out;
  }

  H2BruteForce h2_brute_force(FiniteQuandle const& q, Coefficients const& c,
                              std::size_t component, std::size_t budget) {
    if (c.groups.size() != q.component_count()
        || component >= q.component_count()) {
      throw InvalidArgument("h2_brute_force: bad component or coefficients");
    }
    std::size_t const n    = q.size();
    GroupTable const& L    = c.at(component);
    auto const&       part = q.components().parts[component];
    std::size_t const m    = L.order();

    // free entries (a, b), a in the component, b != a
    constexpr std::size_t    kFixed = static_cast<std::size_t>(-1);
    std::vector<std::size_t> slot(n * n, kFixed);
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    for (std::size_t a : part) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b) {
          slot[a * n + b] = entries.size();
          entries.emplace_back(a, b);
        }
      }
    }
    std::size_t const k = entries.size();
    if (std::size_t t = bounded_power(m, k, budget); t > budget) {
      throw BudgetExceeded("cochains", t);
    }
    if (std::size_t t = bounded_power(m, part.size(), budget); t > budget) {
      throw BudgetExceeded("cochains", t);
    }

    // law instances grouped by the last free entry they read
    struct Law {
      std::size_t s[4];
    };
    std::vector<std::vector<Law>> due(k + 1);
    for (std::size_t a : part) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t d = 0; d < n; ++d) {
          Law law{{slot[a * n + b], slot[q.op(a, b) * n + d],
                   slot[a * n + d], slot[q.op(a, d) * n + q.op(b, d)]}};
          std::size_t last = 0;
          for (std::size_t s : law.s) {
            if (s != kFixed) {
              last = std::max(last, s + 1);
            }
          }
          due[last].push_back(law);
        }
      }
    }
    std::vector<std::size_t> value(k, L.identity());
    auto val = [&](std::size_t s) {
      return s == kFixed ? L.identity() : value[s];
    };
    auto holds = [&](std::size_t level) {
      for (Law const& law : due[level]) {
        if (L.multiply(val(law.s[0]), val(law.s[1]))
            != L.multiply(val(law.s[2]), val(law.s[3]))) {
          return false;
        }
      }
      return true;
    };

    std::vector<std::vector<std::size_t>> cocycles;
    auto enumerate = [&] {
      if (!holds(0)) {
        return;
      }
      if (k == 0) {
        cocycles.push_back({});
        return;
      }
      std::size_t level = 0;
      value[0]          = 0;
      for (;;) {
        bool ok = holds(level + 1);
        if (ok && level + 1 == k) {
          cocycles.push_back(value);
        }
        if (ok && level + 1 < k) {
          ++level;
          value[level] = 0;
          continue;
        }
        while (value[level] + 1 == m) {
          if (level == 0) {
            return;
          }
          --level;
        }
        ++value[level];
      }
    };
    enumerate();
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t z = 0; z < cocycles.size(); ++z) {
      index.emplace(cocycles[z], z);
    }

    H2BruteForce out;
    out.component = component;
    out.cocycles  = cocycles.size();

    auto to_cocycle = [&](std::vector<std::size_t> const& v) {
      Cocycle2 f = Cocycle2::trivial(q, c);
      for (std::size_t s = 0; s < k; ++s) {
        f.at(entries[s].first, entries[s].second) = v[s];
      }
      return f;
    };

    std::vector<bool>        visited(cocycles.size(), false);
    std::vector<std::size_t> gvals(part.size(), 0);
    std::vector<std::size_t> order;
    auto const trivial_it = index.find(std::vector<std::size_t>(k, L.identity()));
    if (trivial_it != index.end()) {
      order.push_back(trivial_it->second);
    }
    for (std::size_t z = 0; z < cocycles.size(); ++z) {
      order.push_back(z);
    }
    std::vector<std::size_t> pos_in_part(n, 0);
    for (std::size_t i = 0; i < part.size(); ++i) {
      pos_in_part[part[i]] = i;
    }
    for (std::size_t z : order) {
      if (visited[z]) {
        continue;
      }
      out.representatives.push_back(to_cocycle(cocycles[z]));
      std::size_t               members = 0;
      std::fill(gvals.begin(), gvals.end(), 0);
      for (;;) {
        std::vector<std::size_t> w(k);
        for (std::size_t s = 0; s < k; ++s) {
          auto [a, b] = entries[s];
          w[s]        = L.multiply(
              L.multiply(L.inverse(gvals[pos_in_part[a]]), cocycles[z][s]),
              gvals[pos_in_part[q.op(a, b)]]);
        }
        auto it = index.find(w);
        if (it == index.end()) {
          throw Error("h2_brute_force: rescaled cocycle is not a cocycle");
        }
        if (!visited[it->second]) {
          visited[it->second] = true;
          ++members;
        }
        std::size_t i = 0;
        while (i < gvals.size() && gvals[i] + 1 == m) {
          gvals[i++] = 0;
        }
        if (i == gvals.size()) {
          break;
        }
        ++gvals[i];
      }
      if (out.representatives.size() == 1) {
        out.coboundaries = members;
      }
    }
    return out;
  }

}  // namespace quandelier
