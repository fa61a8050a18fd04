#include "quandelier/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace quandelier {

  SquareTable::SquareTable(std::size_t n, std::vector<std::size_t> data)
      : n_(n), data_(std::move(data)) {
    if (data_.size() != n_ * n_) {
      throw InvalidArgument("SquareTable: data is not " + std::to_string(n_)
                            + "x" + std::to_string(n_));
    }
  }

  std::string to_string(Axiom axiom) {
    switch (axiom) {
      case Axiom::Q1:
        return "Q1";
      case Axiom::Q2:
        return "Q2";
      case Axiom::Q3:
        return "Q3";
    }
    return "?";
  }

  namespace {
    std::string describe(Axiom axiom, std::vector<std::size_t> const& w) {
      std::string s = to_string(axiom) + " violated at";
      char const* names[] = {" a=", " a'=", " b="};
      char const* q3[]    = {" a=", " b=", " c="};
      for (std::size_t i = 0; i < w.size(); ++i) {
        s += (axiom == Axiom::Q3 ? q3[i] : names[i]) + std::to_string(w[i]);
      }
      return s;
    }
  }  // namespace

  NotAQuandle::NotAQuandle(Axiom axiom, std::vector<std::size_t> witness)
      : Error(describe(axiom, witness)),
        axiom_(axiom),
        witness_(std::move(witness)) {}

  Components components(FiniteQuandle const& q) {
    std::size_t const n = q.size();
    Components        c;
    c.index.assign(n, n);
    for (std::size_t start = 0; start < n; ++start) {
      if (c.index[start] != n) {
        continue;
      }
      std::size_t const        id = c.parts.size();
      std::vector<std::size_t> part{start};
      c.index[start] = id;
      for (std::size_t k = 0; k < part.size(); ++k) {
        for (std::size_t b = 0; b < n; ++b) {
          std::size_t y = q.op(part[k], b);
          if (c.index[y] == n) {
            c.index[y] = id;
            part.push_back(y);
          }
        }
      }
      std::sort(part.begin(), part.end());
      c.parts.push_back(std::move(part));
    }
    return c;
  }

  FiniteQuandle FiniteQuandle::validate(SquareTable op) {
    std::size_t const n = op.size();
    if (n == 0) {
      throw InvalidArgument("a quandle must have at least one element");
    }
    for (std::size_t x : op.data()) {
      if (x >= n) {
        throw InvalidArgument("table entry " + std::to_string(x)
                              + " out of range");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (op(a, a) != a) {
        throw NotAQuandle(Axiom::Q1, {a});
      }
    }
    SquareTable inv(n, n);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t const c = op(a, b);
        if (inv(c, b) != n) {
          throw NotAQuandle(Axiom::Q2, {inv(c, b), a, b});
        }
        inv(c, b) = a;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t const ab = op(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (op(ab, c) != op(op(a, c), op(b, c))) {
            throw NotAQuandle(Axiom::Q3, {a, b, c});
          }
        }
      }
    }
    FiniteQuandle q;
    q.op_         = std::move(op);
    q.inv_op_     = std::move(inv);
    q.components_ = quandelier::components(q);
    for (auto const& part : q.components_.parts) {
      q.basepoints_.push_back(part.front());
    }
    return q;
  }

  FiniteQuandle
  FiniteQuandle::with_basepoints(std::span<std::size_t const> points) const {
    if (points.size() != component_count()) {
      throw InvalidArgument("need exactly one basepoint per component");
    }
    std::vector<std::size_t> bp(component_count(), size());
    for (std::size_t p : points) {
      if (p >= size()) {
        throw InvalidArgument("basepoint out of range");
      }
      std::size_t c = component_of(p);
      if (bp[c] != size()) {
        throw InvalidArgument("two basepoints in component "
                              + std::to_string(c));
      }
      bp[c] = p;
    }
    FiniteQuandle q = *this;
    q.basepoints_   = std::move(bp);
    return q;
  }

  Perm FiniteQuandle::right_translation(std::size_t b) const {
    std::vector<Point> images(size());
    for (std::size_t x = 0; x < size(); ++x) {
      images[x] = op(x, b);
    }
    return Perm(std::move(images));
  }

  std::vector<std::vector<std::size_t>>
  refine_grading(FiniteQuandle const& q, std::span<std::size_t const> classes) {
    if (classes.size() != q.size()) {
      throw InvalidArgument("grading must assign a class to every element");
    }
    std::size_t const k
        = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
    std::vector<std::vector<std::size_t>> split(k);
    for (std::size_t c = 0; c < q.component_count(); ++c) {
      auto const& part = q.components().parts[c];
      std::size_t cls  = classes[part.front()];
      for (std::size_t a : part) {
        if (classes[a] != cls) {
          throw InvalidArgument("grading is not constant on component "
                                + std::to_string(c));
        }
      }
      split[cls].push_back(c);
    }
    return split;
  }

  FiniteQuandle trivial(std::size_t n) {
    SquareTable t(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t(a, b) = a;
      }
    }
    return FiniteQuandle::validate(std::move(t));
  }

  FiniteQuandle dihedral(std::size_t n) {
    return alexander_cyclic(n, n - 1);
  }

  FiniteQuandle alexander_cyclic(std::size_t n, std::size_t t) {
    if (n == 0) {
      throw InvalidArgument("alexander_cyclic: n must be positive");
    }
    if (std::gcd(t % n, n) != 1 && n != 1) {
      throw InvalidArgument("alexander_cyclic: t is not a unit mod n");
    }
    SquareTable table(n);
    std::size_t const s = (n + 1 - t % n) % n;  // 1 - t mod n
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table(a, b) = (t % n * a + s * b) % n;
      }
    }
    return FiniteQuandle::validate(std::move(table));
  }

  FiniteQuandle q_mn(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
      throw InvalidArgument("q_mn: m and n must be positive");
    }
    std::size_t const size = m + n;
    SquareTable       t(size);
    for (std::size_t a = 0; a < size; ++a) {
      bool const        first = a < m;
      std::size_t const next  = first ? (a + 1) % m : m + (a - m + 1) % n;
      for (std::size_t b = 0; b < size; ++b) {
        t(a, b) = (first == (b < m)) ? a : next;
      }
    }
    return FiniteQuandle::validate(std::move(t));
  }

  FiniteQuandle alexander(SquareTable const&           addition,
                          std::size_t                  zero,
                          std::span<std::size_t const> automorphism) {
    std::size_t const n = addition.size();
    if (automorphism.size() != n || zero >= n) {
      throw InvalidArgument("alexander: size mismatch");
    }
    std::vector<std::size_t> neg(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (addition(a, b) == zero) {
          neg[a] = b;
        }
      }
      if (neg[a] == n) {
        throw InvalidArgument("alexander: addition table has no inverses");
      }
    }
    std::vector<bool> hit(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (addition(a, b) != addition(b, a)) {
          throw InvalidArgument("alexander: group is not abelian");
        }
        if (automorphism[addition(a, b)]
            != addition(automorphism[a], automorphism[b])) {
          throw InvalidArgument("alexander: map is not an endomorphism");
        }
      }
      if (automorphism[a] >= n || hit[automorphism[a]]) {
        throw InvalidArgument("alexander: map is not bijective");
      }
      hit[automorphism[a]] = true;
    }
    SquareTable t(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        // T(a - b) + b
        t(a, b) = addition(automorphism[addition(a, neg[b])], b);
      }
    }
    return FiniteQuandle::validate(std::move(t));
  }

  std::pair<FiniteQuandle, std::vector<Perm>>
  conjugation_class(FiniteGroup const& group, Perm const& seed) {
    if (!group.contains(seed)) {
      throw InvalidArgument("conj_class: seed is not in the group");
    }
    std::vector<Perm>                                 cls{seed};
    std::unordered_map<Perm, std::size_t, PermHash> index{{seed, 0}};
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (std::size_t gi : group.generators()) {
        Perm const& g = group.element(gi);
        Perm        y = g.inverse() * cls[k] * g;
        if (index.try_emplace(y, cls.size()).second) {
          cls.push_back(std::move(y));
        }
      }
    }
    std::size_t const n = cls.size();
    SquareTable       t(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t(a, b) = index.at(cls[b].inverse() * cls[a] * cls[b]);
      }
    }
    return {FiniteQuandle::validate(std::move(t)), std::move(cls)};
  }

  FiniteQuandle conj_class(FiniteGroup const& group, Perm const& seed) {
    return conjugation_class(group, seed).first;
  }

  FiniteQuandle core(FiniteGroup const& group) {
    std::size_t const n = group.order();
    SquareTable       t(n);
    for (std::size_t a = 0; a < n; ++a) {
      Perm const ainv = group.element(a).inverse();
      for (std::size_t b = 0; b < n; ++b) {
        Perm const& pb = group.element(b);
        t(a, b)        = *group.index_of(pb * ainv * pb);
      }
    }
    return FiniteQuandle::validate(std::move(t));
  }

  Perm transposition(std::size_t degree, Point i, Point j) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::swap(images.at(i), images.at(j));
    return Perm(std::move(images));
  }

  Perm cycle(std::size_t degree, std::span<Point const> points) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t k = 0; k < points.size(); ++k) {
      images.at(points[k]) = points[(k + 1) % points.size()];
    }
    return Perm(std::move(images));
  }

  FiniteGroup symmetric_group(std::size_t k) {
    std::vector<Perm> gens;
    if (k >= 2) {
      gens.push_back(transposition(k, 0, 1));
      std::vector<Point> all(k);
      std::iota(all.begin(), all.end(), Point{0});
      gens.push_back(cycle(k, all));
    }
    return closure(gens, k, Budgets{}.group_elements * 100);
  }

  FiniteGroup alternating_group(std::size_t k) {
    std::vector<Perm> gens;
    for (Point j = 2; j < k; ++j) {
      Point pts[] = {0, 1, j};
      gens.push_back(cycle(k, pts));
    }
    return closure(gens, k, Budgets{}.group_elements * 100);
  }

  InnerGroup inner_group(FiniteQuandle const& q,
                         InnerVariant         variant,
                         std::size_t          budget) {
    InnerGroup result;
    for (std::size_t a = 0; a < q.size(); ++a) {
      result.inn.push_back(q.right_translation(a));
    }
    std::vector<Perm> gens;
    if (variant == InnerVariant::full) {
      gens = result.inn;
    } else {
      Perm const base_inv = result.inn[0].inverse();
      for (std::size_t b = 0; b < q.size(); ++b) {
        gens.push_back(base_inv * result.inn[b]);
      }
    }
    result.group = closure(gens, q.size(), budget);
    return result;
  }

  QuandleHom::QuandleHom(FiniteQuandle            source,
                         FiniteQuandle            target,
                         std::vector<std::size_t> map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {
    if (map_.size() != source_.size()) {
      throw InvalidArgument("map length does not match the source size");
    }
    for (std::size_t x : map_) {
      if (x >= target_.size()) {
        throw InvalidArgument("map image out of range");
      }
    }
    for (std::size_t a = 0; a < source_.size(); ++a) {
      for (std::size_t b = 0; b < source_.size(); ++b) {
        if (map_[source_.op(a, b)] != target_.op(map_[a], map_[b])) {
          throw NotAHomomorphism(a, b);
        }
      }
    }
  }

  QuandleHom QuandleHom::identity(FiniteQuandle const& q) {
    std::vector<std::size_t> map(q.size());
    std::iota(map.begin(), map.end(), std::size_t{0});
    return QuandleHom(q, q, std::move(map));
  }

  bool QuandleHom::is_surjective() const {
    std::vector<bool> hit(target_.size(), false);
    for (std::size_t x : map_) {
      hit[x] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  }

  std::vector<std::vector<std::size_t>> QuandleHom::fibres() const {
    std::vector<std::vector<std::size_t>> result(target_.size());
    for (std::size_t a = 0; a < map_.size(); ++a) {
      result[map_[a]].push_back(a);
    }
    return result;
  }

  QuandleHom compose(QuandleHom const& first, QuandleHom const& second) {
    if (!(first.target() == second.source())) {
      throw InvalidArgument("compose: target/source mismatch");
    }
    std::vector<std::size_t> map(first.source().size());
    for (std::size_t a = 0; a < map.size(); ++a) {
      map[a] = second(first(a));
    }
    return QuandleHom(first.source(), second.target(), std::move(map));
  }

  CoveringCheck is_covering(QuandleHom const& p) {
    CoveringCheck result;
    auto const    fibres = p.fibres();
    for (std::size_t q = 0; q < fibres.size(); ++q) {
      if (fibres[q].empty()) {
        result.failure = CoveringCheck::Failure::not_surjective;
        result.witness = {q};
        return result;
      }
    }
    FiniteQuandle const& src = p.source();
    for (auto const& fibre : fibres) {
      std::size_t const x = fibre.front();
      for (std::size_t k = 1; k < fibre.size(); ++k) {
        std::size_t const y = fibre[k];
        for (std::size_t a = 0; a < src.size(); ++a) {
          if (src.op(a, x) != src.op(a, y)) {
            result.failure = CoveringCheck::Failure::behaviour;
            result.witness = {a, x, y};
            return result;
          }
        }
      }
    }
    result.is_covering = true;
    return result;
  }

  Pullback pullback(QuandleHom const& p, QuandleHom const& f) {
    if (!(p.target() == f.target())) {
      throw InvalidArgument("pullback: p and f have different targets");
    }
    if (!is_covering(p)) {
      throw InvalidArgument("pullback: p is not a covering");
    }
    Pullback   result;
    auto const fibres = p.fibres();
    for (std::size_t x = 0; x < f.source().size(); ++x) {
      for (std::size_t y : fibres[f(x)]) {
        result.pairs.emplace_back(x, y);
      }
    }
    std::size_t const n = result.pairs.size();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < n; ++k) {
      index.emplace(result.pairs[k], k);
    }
    SquareTable t(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto [x1, y1] = result.pairs[i];
      for (std::size_t j = 0; j < n; ++j) {
        auto [x2, y2] = result.pairs[j];
        t(i, j)       = index.at({f.source().op(x1, x2), p.source().op(y1, y2)});
      }
    }
    FiniteQuandle            total = FiniteQuandle::validate(std::move(t));
    std::vector<std::size_t> to_x(n), to_y(n);
    for (std::size_t k = 0; k < n; ++k) {
      to_x[k] = result.pairs[k].first;
      to_y[k] = result.pairs[k].second;
    }
    result.projection = QuandleHom(total, f.source(), std::move(to_x));
    result.to_cover   = QuandleHom(total, p.source(), std::move(to_y));
    return result;
  }

  CoveringUnion union_coverings(std::span<QuandleHom const> coverings) {
    if (coverings.empty()) {
      throw InvalidArgument("union_coverings: empty union");
    }
    FiniteQuandle const& base = coverings.front().target();
    std::vector<std::vector<std::size_t>> section;
    for (QuandleHom const& p : coverings) {
      if (!(p.target() == base)) {
        throw InvalidArgument("union_coverings: targets differ");
      }
      if (!is_covering(p)) {
        throw InvalidArgument("union_coverings: input is not a covering");
      }
      std::vector<std::size_t> s(base.size());
      auto const               fibres = p.fibres();
      for (std::size_t q = 0; q < base.size(); ++q) {
        s[q] = fibres[q].front();
      }
      section.push_back(std::move(s));
    }
    CoveringUnion            result;
    std::vector<std::size_t> offset;
    for (std::size_t i = 0; i < coverings.size(); ++i) {
      offset.push_back(result.tags.size());
      for (std::size_t a = 0; a < coverings[i].source().size(); ++a) {
        result.tags.emplace_back(i, a);
      }
    }
    std::size_t const n = result.tags.size();
    SquareTable       t(n);
    for (std::size_t u = 0; u < n; ++u) {
      auto [i, a]              = result.tags[u];
      FiniteQuandle const& src = coverings[i].source();
      for (std::size_t v = 0; v < n; ++v) {
        auto [j, b] = result.tags[v];
        t(u, v)     = offset[i] + src.op(a, section[i][coverings[j](b)]);
      }
    }
    std::vector<std::size_t> map(n);
    for (std::size_t u = 0; u < n; ++u) {
      map[u] = coverings[result.tags[u].first](result.tags[u].second);
    }
    result.projection
        = QuandleHom(FiniteQuandle::validate(std::move(t)), base, std::move(map));
    return result;
  }

  QuandleHom trivial_covering(FiniteQuandle const& q, std::size_t fibre) {
    if (fibre == 0) {
      throw InvalidArgument("trivial_covering: fibre must be nonempty");
    }
    std::size_t const n = q.size() * fibre;
    SquareTable       t(n);
    std::vector<std::size_t> map(n);
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t s = 0; s < fibre; ++s) {
        map[a * fibre + s] = a;
        for (std::size_t b = 0; b < q.size(); ++b) {
          for (std::size_t r = 0; r < fibre; ++r) {
            t(a * fibre + s, b * fibre + r) = q.op(a, b) * fibre + s;
          }
        }
      }
    }
    return QuandleHom(FiniteQuandle::validate(std::move(t)), q, std::move(map));
  }

  std::pair<FiniteQuandle, std::vector<std::size_t>>
  quotient(FiniteQuandle const& q, std::span<std::size_t const> classes) {
    if (classes.size() != q.size()) {
      throw InvalidArgument("quotient: one class per element required");
    }
    std::unordered_map<std::size_t, std::size_t> renumber;
    std::vector<std::size_t>                     cls(q.size());
    std::vector<std::size_t>                     rep;
    for (std::size_t a = 0; a < q.size(); ++a) {
      auto [it, inserted] = renumber.try_emplace(classes[a], rep.size());
      if (inserted) {
        rep.push_back(a);
      }
      cls[a] = it->second;
    }
    std::size_t const k = rep.size();
    SquareTable       t(k);
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t b = 0; b < q.size(); ++b) {
        std::size_t const c = cls[q.op(a, b)];
        if (a == rep[cls[a]] && b == rep[cls[b]]) {
          t(cls[a], cls[b]) = c;
        }
      }
    }
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t b = 0; b < q.size(); ++b) {
        if (t(cls[a], cls[b]) != cls[q.op(a, b)]) {
          throw InvalidArgument("quotient: relation is not a congruence");
        }
      }
    }
    return {FiniteQuandle::validate(std::move(t)), std::move(cls)};
  }

}  // namespace quandelier
