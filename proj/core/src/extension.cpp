#include <algorithm>
#include <deque>

#include "quandelier/cohomology.hpp"
#include "quandelier/error.hpp"

namespace quandelier {

  namespace {

    std::vector<std::size_t> cocycle_offsets(FiniteQuandle const& q,
                                             Coefficients const&  c) {
      std::vector<std::size_t> offset(q.size() + 1, 0);
      for (std::size_t a = 0; a < q.size(); ++a) {
        offset[a + 1] = offset[a] + c.at(q.component_of(a)).order();
      }
      return offset;
    }

  }  // namespace

  std::size_t cocycle_extension_index(FiniteQuandle const& q,
                                      Coefficients const& c, std::size_t u,
                                      std::size_t a) {
    return cocycle_offsets(q, c).at(a) + u;
  }

  Extension extension_from_cocycle(FiniteQuandle const& q,
                                   Coefficients const& c, Cocycle2 const& f) {
    if (CocycleCheck check = is_cocycle(q, c, f); !check) {
      throw InvalidArgument("extension_from_cocycle: not a cocycle");
    }
    auto const        offset = cocycle_offsets(q, c);
    std::size_t const total  = offset.back();

    std::vector<std::size_t> base(total), coord(total);
    for (std::size_t a = 0; a < q.size(); ++a) {
      for (std::size_t u = offset[a]; u < offset[a + 1]; ++u) {
        base[u]  = a;
        coord[u] = u - offset[a];
      }
    }
    SquareTable table(total);
    for (std::size_t x = 0; x < total; ++x) {
      std::size_t const a = base[x];
      GroupTable const& L = c.at(q.component_of(a));
      for (std::size_t y = 0; y < total; ++y) {
        std::size_t const b = base[y];
        table(x, y) = offset[q.op(a, b)] + L.multiply(coord[x], f(a, b));
      }
    }
    Extension e;
    e.coefficients = c;
    e.action.resize(total);
    for (std::size_t x = 0; x < total; ++x) {
      GroupTable const& L = c.at(q.component_of(base[x]));
      for (std::size_t l = 0; l < L.order(); ++l) {
        e.action[x].push_back(offset[base[x]] + L.multiply(l, coord[x]));
      }
    }
    e.projection =
        QuandleHom(FiniteQuandle::validate(std::move(table)), q, base);
    return e;
  }

  std::optional<std::string> extension_defect(Extension const& e) {
    FiniteQuandle const& E = e.total();
    FiniteQuandle const& Q = e.base();
    if (e.coefficients.groups.size() != Q.component_count()) {
      return "coefficient groups do not match the components";
    }
    if (e.action.size() != E.size()) {
      return "action table has the wrong size";
    }
    for (std::size_t x = 0; x < E.size(); ++x) {
      if (e.action[x].size() != e.group_over(x).order()) {
        return "action row has the wrong length";
      }
      for (std::size_t l : e.action[x]) {
        if (l >= E.size() || e.projection(l) != e.projection(x)) {
          return "action leaves the fibre";
        }
      }
    }
    for (std::size_t x = 0; x < E.size(); ++x) {
      GroupTable const& L = e.group_over(x);
      if (e.act(L.identity(), x) != x) {
        return "identity acts nontrivially";
      }
      for (std::size_t l = 0; l < L.order(); ++l) {
        for (std::size_t m = 0; m < L.order(); ++m) {
          if (e.act(l, e.act(m, x)) != e.act(L.multiply(l, m), x)) {
            return "not a left action";
          }
        }
      }
    }
    for (std::size_t x = 0; x < E.size(); ++x) {
      for (std::size_t l = 0; l < e.group_over(x).order(); ++l) {
        for (std::size_t y = 0; y < E.size(); ++y) {
          if (E.op(e.act(l, x), y) != e.act(l, E.op(x, y))) {
            return "(E1) fails: action does not commute with translations";
          }
        }
        for (std::size_t y = 0; y < E.size(); ++y) {
          if (l < e.group_over(y).order()
              && E.op(x, e.act(l, y)) != E.op(x, y)) {
            return "(E1) fails: translations depend on the fibre point";
          }
        }
      }
    }
    auto const fibres = e.projection.fibres();
    for (std::size_t a = 0; a < Q.size(); ++a) {
      GroupTable const& L = e.coefficients.at(Q.component_of(a));
      if (fibres[a].size() != L.order()) {
        return "(E2) fails: fibre size differs from the group order";
      }
      std::vector<std::size_t> orbit(e.action[fibres[a].front()]);
      std::sort(orbit.begin(), orbit.end());
      if (orbit != fibres[a]) {
        return "(E2) fails: action is not free and transitive";
      }
    }
    if (!is_covering(e.projection)) {
      return "projection is not a covering";
    }
    return std::nullopt;
  }

  std::vector<std::size_t> canonical_section(Extension const& e) {
    auto const               fibres = e.projection.fibres();
    std::vector<std::size_t> s;
    for (auto const& fibre : fibres) {
      if (fibre.empty()) {
        throw InvalidArgument("canonical_section: empty fibre");
      }
      s.push_back(fibre.front());
    }
    return s;
  }

  namespace {
    // coord[y] = the l with l . s(p(y)) = y
    std::vector<std::size_t> fibre_coordinates(
        Extension const& e, std::span<std::size_t const> section) {
      FiniteQuandle const& Q = e.base();
      if (section.size() != Q.size()) {
        throw InvalidArgument("section has the wrong size");
      }
      constexpr std::size_t    kUnset = static_cast<std::size_t>(-1);
      std::vector<std::size_t> coord(e.total().size(), kUnset);
      for (std::size_t a = 0; a < Q.size(); ++a) {
        if (e.projection(section[a]) != a) {
          throw InvalidArgument("section is not a section");
        }
        GroupTable const& L = e.coefficients.at(Q.component_of(a));
        for (std::size_t l = 0; l < L.order(); ++l) {
          coord[e.act(l, section[a])] = l;
        }
      }
      if (std::find(coord.begin(), coord.end(), kUnset) != coord.end()) {
        throw InvalidArgument("action is not transitive on the fibres");
      }
      return coord;
    }
  }  // namespace

  Cocycle2 cocycle_from_extension(Extension const&             e,
                                  std::span<std::size_t const> section) {
    FiniteQuandle const& Q     = e.base();
    auto const           coord = fibre_coordinates(e, section);
    Cocycle2 f{Q.size(), std::vector<std::size_t>(Q.size() * Q.size())};
    for (std::size_t a = 0; a < Q.size(); ++a) {
      for (std::size_t b = 0; b < Q.size(); ++b) {
        f.at(a, b) = coord[e.total().op(section[a], section[b])];
      }
    }
    return f;
  }

  // ---------------------------------------------------------------------

  std::vector<FundamentalGroup>
  graded_fundamental_group(FiniteQuandle const& q, std::size_t budget) {
    std::vector<FundamentalGroup> out;
    for (std::size_t i = 0; i < q.component_count(); ++i) {
      out.push_back(fundamental_group(q, q.basepoint(i), budget));
    }
    return out;
  }

  std::vector<std::size_t>
  extend_hom(FundamentalGroup const& pi1, GroupTable const& target,
             std::span<std::size_t const> generator_images) {
    if (!pi1.finite_form) {
      throw InvalidArgument("extend_hom: pi_1 has no finite form");
    }
    if (generator_images.size() != pi1.generator_elements.size()) {
      throw InvalidArgument("extend_hom: one image per generator required");
    }
    std::size_t const        m      = pi1.elements.size();
    constexpr std::size_t    kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> img(m, kUnset);
    img[0] = target.identity();
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < generator_images.size(); ++g) {
        if (generator_images[g] >= target.order()) {
          throw InvalidArgument("extend_hom: image out of range");
        }
        std::size_t v     = pi1.multiply(u, pi1.generator_elements[g]);
        std::size_t value = target.multiply(img[u], generator_images[g]);
        if (img[v] == kUnset) {
          img[v] = value;
          queue.push_back(v);
        } else if (img[v] != value) {
          throw InvalidArgument("extend_hom: images violate a relation");
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (img[pi1.multiply(i, j)] != target.multiply(img[i], img[j])) {
          throw InvalidArgument("extend_hom: not a homomorphism");
        }
      }
    }
    return img;
  }

  std::vector<std::vector<std::size_t>>
  enumerate_pi1_homs(FundamentalGroup const& pi1, GroupTable const& target,
                     std::size_t budget) {
    Simplified const  s       = simplify(pi1.presentation.presentation);
    FiniteGroup const regular = target.regular_representation();
    auto const        index   = target.regular_index();
    std::vector<std::size_t> element_of(index.size());
    for (std::size_t x = 0; x < index.size(); ++x) {
      element_of[index[x]] = x;
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto const& tuple : enumerate_homs(s.presentation, regular, budget)) {
      std::vector<std::size_t> gens;
      for (Word const& w : s.substitution) {
        gens.push_back(element_of[evaluate(w, tuple, regular)]);
      }
      out.push_back(extend_hom(pi1, target, gens));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Extension
  extension_from_hom(FiniteQuandle const&                  q,
                     Coefficients const&                   c,
                     std::span<FundamentalGroup const>     pi1,
                     std::span<std::vector<std::size_t> const> homs,
                     std::size_t                           budget) {
    std::size_t const n = q.size();
    if (pi1.size() != q.component_count() || homs.size() != pi1.size()
        || c.groups.size() != pi1.size()) {
      throw InvalidArgument("extension_from_hom: one entry per component");
    }
    UniversalCover const u      = universal_cover(q, budget);
    auto const           fibres = u.projection.fibres();
    Cocycle2 f{n, std::vector<std::size_t>(n * n)};
    for (std::size_t i = 0; i < q.component_count(); ++i) {
      CoverPiece const& piece = u.pieces[i];
      if (pi1[i].elements != piece.pi1 || pi1[i].basepoint != q.basepoint(i)) {
        throw InvalidArgument("extension_from_hom: pi_1 at another basepoint");
      }
      if (homs[i].size() != piece.pi1.size()) {
        throw InvalidArgument("extension_from_hom: one image per element");
      }
      Adj0Enumeration const& en = piece.enumeration;
      // coord[c] = k with pi1[k] . s(endpoint(c)) = c
      std::vector<std::size_t> coord(en.size());
      for (std::size_t a : q.components().parts[i]) {
        std::size_t const s = fibres[a].front() - piece.offset;
        for (std::size_t k = 0; k < piece.pi1.size(); ++k) {
          coord[en.multiply(piece.pi1[k], s)] = k;
        }
      }
      for (std::size_t a : q.components().parts[i]) {
        for (std::size_t b = 0; b < n; ++b) {
          std::size_t y = u.cover().op(fibres[a].front(), fibres[b].front());
          f.at(a, b)    = homs[i][coord[y - piece.offset]];
        }
      }
    }
    return extension_from_cocycle(q, c, f);
  }

  std::vector<std::vector<std::size_t>>
  hom_from_extension(Extension const&                  e,
                     std::span<FundamentalGroup const> pi1) {
    FiniteQuandle const& Q = e.base();
    FiniteQuandle const& E = e.total();
    if (pi1.size() != Q.component_count()) {
      throw InvalidArgument("hom_from_extension: one pi_1 per component");
    }
    auto const fibres = e.projection.fibres();
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < Q.component_count(); ++i) {
      FundamentalGroup const& G = pi1[i];
      if (!G.enumeration) {
        throw InvalidArgument("hom_from_extension: pi_1 has no finite form");
      }
      GroupTable const&  L    = e.coefficients.at(i);
      std::size_t const  lift = fibres.at(G.basepoint).front();
      std::vector<std::size_t> h;
      for (std::size_t k : G.elements) {
        std::size_t y = lift;
        Word const  w = G.enumeration->element_word(k);
        for (Letter l : w.letters()) {
          std::size_t s = fibres[generator_of(l)].front();
          y = is_inverse(l) ? E.inv_op(y, s) : E.op(y, s);
        }
        std::size_t lambda = L.order();
        for (std::size_t t = 0; t < L.order(); ++t) {
          if (e.act(t, lift) == y) {
            lambda = t;
            break;
          }
        }
        if (lambda == L.order()) {
          throw InvalidArgument("hom_from_extension: loop left the fibre");
        }
        h.push_back(lambda);
      }
      out.push_back(std::move(h));
    }
    return out;
  }

  std::optional<std::vector<std::size_t>>
  are_equivalent_extensions(Extension const& e1, Extension const& e2,
                            std::size_t budget) {
    FiniteQuandle const& Q = e1.base();
    if (!(Q == e2.base()) || e1.coefficients.groups.size()
                                 != e2.coefficients.groups.size()) {
      throw InvalidArgument("are_equivalent_extensions: different bases");
    }
    for (std::size_t i = 0; i < e1.coefficients.groups.size(); ++i) {
      if (!(e1.coefficients.at(i) == e2.coefficients.at(i))) {
        throw InvalidArgument(
            "are_equivalent_extensions: different coefficient groups");
      }
    }
    FiniteQuandle const& E1 = e1.total();
    FiniteQuandle const& E2 = e2.total();
    if (E1.size() != E2.size()) {
      return std::nullopt;
    }
    auto const f1 = e1.projection.fibres();
    auto const f2 = e2.projection.fibres();

    constexpr std::size_t    kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> phi(E1.size(), kUnset);
    std::size_t              steps = 0;

    for (std::size_t i = 0; i < Q.component_count(); ++i) {
      GroupTable const& L      = e1.coefficients.at(i);
      std::size_t const q_i    = Q.basepoint(i);
      std::size_t const y0     = f1[q_i].front();
      bool              found  = false;
      std::vector<std::size_t> members;
      for (std::size_t a : Q.components().parts[i]) {
        members.insert(members.end(), f1[a].begin(), f1[a].end());
      }
      for (std::size_t z : f2[q_i]) {
        for (std::size_t x : members) {
          phi[x] = kUnset;
        }
        bool                    ok = true;
        std::deque<std::size_t> queue{y0};
        phi[y0]     = z;
        auto assign = [&](std::size_t x, std::size_t value) {
          if (++steps > budget) {
            throw BudgetExceeded("propagations", steps);
          }
          if (phi[x] == kUnset) {
            phi[x] = value;
            queue.push_back(x);
          } else if (phi[x] != value) {
            ok = false;
          }
        };
        while (ok && !queue.empty()) {
          std::size_t x = queue.front();
          queue.pop_front();
          for (std::size_t l = 0; l < L.order() && ok; ++l) {
            assign(e1.act(l, x), e2.act(l, phi[x]));
          }
          for (std::size_t b = 0; b < Q.size() && ok; ++b) {
            assign(E1.op(x, f1[b].front()), E2.op(phi[x], f2[b].front()));
            assign(E1.inv_op(x, f1[b].front()),
                   E2.inv_op(phi[x], f2[b].front()));
          }
        }
        if (ok) {
          found = std::all_of(members.begin(), members.end(),
                              [&](std::size_t x) { return phi[x] != kUnset; });
        }
        if (found) {
          break;
        }
      }
      if (!found) {
        return std::nullopt;
      }
    }
    // bijective, compatible with the projections and the operation
    std::vector<bool> hit(E2.size(), false);
    for (std::size_t x = 0; x < E1.size(); ++x) {
      if (hit[phi[x]] || e2.projection(phi[x]) != e1.projection(x)) {
        return std::nullopt;
      }
      hit[phi[x]] = true;
    }
    for (std::size_t x = 0; x < E1.size(); ++x) {
      for (std::size_t y = 0; y < E1.size(); ++y) {
        if (phi[E1.op(x, y)] != E2.op(phi[x], phi[y])) {
          return std::nullopt;
        }
      }
    }
    return phi;
  }

}  // namespace quandelier
