#include <algorithm>
#include <deque>

#include "quandelier/error.hpp"
#include "quandelier/fundamental.hpp"

namespace quandelier {

  namespace {

    std::size_t act_on(FiniteQuandle const& q, std::size_t x, Letter l) {
      std::size_t b = generator_of(l);
      return is_inverse(l) ? q.inv_op(x, b) : q.op(x, b);
    }

    BudgetNote note_of(BudgetExceeded const& e) {
      return {e.quantity(), e.reached()};
    }

  }  // namespace

  // ---------------------------------------------------------------------
  // Adj(Q)^0

  Word Adj0Enumeration::element_word(std::size_t coset) const {
    return element_words_.at(coset);
  }

  std::size_t Adj0Enumeration::multiply(std::size_t c, std::size_t d) const {
    return table_.trace(c, element_words_.at(d));
  }

  std::size_t Adj0Enumeration::inverse(std::size_t c) const {
    return table_.trace(0, element_words_.at(c).inverse());
  }

  std::vector<std::size_t> Adj0Enumeration::stabilizer() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < endpoint_.size(); ++c) {
      if (endpoint_[c] == basepoint_) {
        out.push_back(c);
      }
    }
    return out;
  }

  Adj0Enumeration adj0_enumeration_at(FiniteQuandle const& q,
                                      std::size_t          basepoint,
                                      std::size_t          budget) {
    if (basepoint >= q.size()) {
      throw InvalidArgument("adj0_enumeration: basepoint out of range");
    }
    Adj0Enumeration out;
    out.basepoint_ = basepoint;
    Word const subgroup[] = {Word{letter(basepoint)}};
    out.table_ = todd_coxeter(adjoint_presentation(q), subgroup, budget);

    std::size_t const cosets = out.table_.coset_count();
    out.endpoint_.resize(cosets);
    out.element_words_.resize(cosets);
    for (std::size_t c = 0; c < cosets; ++c) {
      Word const& rep = out.table_.representative(c);
      std::size_t y   = basepoint;
      for (Letter l : rep.letters()) {
        y = act_on(q, y, l);
      }
      out.endpoint_[c] = y;
      Word w = Word::generator(basepoint, static_cast<int>(-rep.degree()));
      w *= rep;
      out.element_words_[c] = w.normalized();
    }
    // the endpoint must not depend on the representative chosen
    for (std::size_t c = 0; c < cosets; ++c) {
      for (std::size_t b = 0; b < q.size(); ++b) {
        if (out.endpoint_[out.table_.act(c, letter(b))]
            != q.op(out.endpoint_[c], b)) {
          throw Error("adj0_enumeration: endpoint map is not well defined");
        }
      }
    }
    return out;
  }

  Adj0Enumeration adj0_enumeration(FiniteQuandle const& q,
                                   std::size_t          component,
                                   std::size_t          budget) {
    return adj0_enumeration_at(q, q.basepoint(component), budget);
  }

  // ---------------------------------------------------------------------
  // pi_1

  std::optional<std::size_t>
  FundamentalGroup::position(std::size_t coset) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), coset);
    if (it == elements.end() || *it != coset) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - elements.begin());
  }

  std::size_t FundamentalGroup::multiply(std::size_t i, std::size_t j) const {
    if (!enumeration) {
      throw InvalidArgument("FundamentalGroup: no finite form");
    }
    return *position(enumeration->multiply(elements.at(i), elements.at(j)));
  }

  FundamentalGroup fundamental_group(FiniteQuandle const& q,
                                     std::size_t          basepoint,
                                     std::size_t          budget) {
    FundamentalGroup out;
    out.basepoint    = basepoint;
    out.presentation = pi1_presentation(q, basepoint);
    out.abelian      = abelian_invariants(out.presentation.presentation);
    try {
      out.enumeration = adj0_enumeration_at(q, basepoint, budget);
    } catch (BudgetExceeded const& e) {
      out.budget_failure = note_of(e);
      return out;
    }
    Adj0Enumeration const& en = *out.enumeration;
    out.elements              = en.stabilizer();

    for (std::size_t g = 0; g < out.presentation.presentation.generator_count;
         ++g) {
      auto pos =
          out.position(en.coset_of(out.presentation.loop_word(g, q)));
      if (!pos) {
        throw Error("fundamental_group: loop does not return to the basepoint");
      }
      out.generator_elements.push_back(*pos);
    }

    std::vector<Perm> perms;
    perms.reserve(out.elements.size());
    for (std::size_t k : out.elements) {
      std::vector<Point> images(en.size());
      for (std::size_t c = 0; c < en.size(); ++c) {
        images[c] = en.multiply(c, k);
      }
      perms.emplace_back(std::move(images));
    }
    out.finite_form =
        FiniteGroup::from_elements(std::move(perms), out.generator_elements);

    try {
      Simplified s = simplify(out.presentation.presentation);
      out.presentation_order =
          todd_coxeter(s.presentation, {}, budget).coset_count();
    } catch (BudgetExceeded const&) {
    }
    return out;
  }

  // ---------------------------------------------------------------------
  // Universal covering

  UniversalCover universal_cover(FiniteQuandle const& q, std::size_t budget) {
    UniversalCover out;
    std::size_t    total = 0;
    for (std::size_t i = 0; i < q.component_count(); ++i) {
      CoverPiece piece;
      piece.component   = i;
      piece.offset      = total;
      piece.enumeration = adj0_enumeration(q, i, budget);
      piece.pi1         = piece.enumeration.stabilizer();
      total += piece.enumeration.size();
      if (total > Budgets{}.group_elements) {
        throw BudgetExceeded("cover elements", total);
      }
      out.pieces.push_back(std::move(piece));
    }

    SquareTable              table(total);
    std::vector<std::size_t> projection(total);
    std::vector<std::size_t> piece_of(total);
    for (CoverPiece const& p : out.pieces) {
      for (std::size_t c = 0; c < p.enumeration.size(); ++c) {
        projection[p.offset + c] = p.enumeration.endpoint(c);
        piece_of[p.offset + c]   = p.component;
      }
    }
    for (std::size_t x = 0; x < total; ++x) {
      CoverPiece const& p = out.pieces[piece_of[x]];
      std::size_t const c = x - p.offset;
      std::size_t const a = projection[x];
      std::size_t const base = p.enumeration.table().act(c, letter(a, true));
      for (std::size_t y = 0; y < total; ++y) {
        std::size_t b = projection[y];
        table(x, y)   = p.offset + p.enumeration.table().act(base, letter(b));
      }
    }
    FiniteQuandle cover = FiniteQuandle::validate(std::move(table));
    out.projection = QuandleHom(std::move(cover), q, std::move(projection));

    for (CoverPiece& p : out.pieces) {
      std::vector<std::size_t> gens;
      for (std::size_t k : p.pi1) {
        std::vector<Point> images(total);
        for (std::size_t x = 0; x < total; ++x) {
          images[x] = x;
        }
        for (std::size_t c = 0; c < p.enumeration.size(); ++c) {
          images[p.offset + c] = p.offset + p.enumeration.multiply(k, c);
        }
        if (!p.deck_perms.empty()) {
          gens.push_back(p.deck_perms.size());
        }
        p.deck_perms.emplace_back(std::move(images));
      }
      p.deck = FiniteGroup::from_elements(p.deck_perms, gens);
    }
    return out;
  }

  // ---------------------------------------------------------------------
  // Monodromy and lifting

  std::vector<std::size_t>
  Monodromy::stabilizer(std::size_t fibre_position) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < action.size(); ++k) {
      if (action[k][fibre_position] == fibre_position) {
        out.push_back(k);
      }
    }
    return out;
  }

  Monodromy monodromy(QuandleHom const& p, FundamentalGroup const& pi1) {
    if (!pi1.enumeration) {
      BudgetNote const note =
          pi1.budget_failure.value_or(BudgetNote{"cosets", 0});
      throw BudgetExceeded(note.quantity, note.reached);
    }
    if (!is_covering(p)) {
      throw InvalidArgument("monodromy: map is not a covering");
    }
    FiniteQuandle const& cover  = p.source();
    auto const           fibres = p.fibres();
    Monodromy            out;
    out.fibre = fibres.at(pi1.basepoint);
    std::vector<std::size_t> pos(cover.size(), out.fibre.size());
    for (std::size_t i = 0; i < out.fibre.size(); ++i) {
      pos[out.fibre[i]] = i;
    }
    for (std::size_t k : pi1.elements) {
      Word const         w = pi1.enumeration->element_word(k);
      std::vector<Point> images(out.fibre.size());
      for (std::size_t i = 0; i < out.fibre.size(); ++i) {
        std::size_t y = out.fibre[i];
        for (Letter l : w.letters()) {
          std::size_t s = fibres[generator_of(l)].front();
          y = is_inverse(l) ? cover.inv_op(y, s) : cover.op(y, s);
        }
        if (pos[y] == out.fibre.size()) {
          throw Error("monodromy: loop left the fibre");
        }
        images[i] = pos[y];
      }
      out.action.emplace_back(std::move(images));
    }
    return out;
  }

  Monodromy monodromy(QuandleHom const& p, std::size_t basepoint,
                      std::size_t budget) {
    return monodromy(p, fundamental_group(p.target(), basepoint, budget));
  }

  LiftResult check_lifting(QuandleHom const& f, std::size_t x,
                           QuandleHom const& p, std::size_t lift_point) {
    FiniteQuandle const& X     = f.source();
    FiniteQuandle const& cover = p.source();
    if (!X.is_connected()) {
      throw InvalidArgument("check_lifting: source must be connected");
    }
    if (x >= X.size() || lift_point >= cover.size()
        || f(x) != p(lift_point)) {
      throw InvalidArgument("check_lifting: basepoints do not match");
    }
    if (!(f.target() == p.target())) {
      throw InvalidArgument("check_lifting: maps have different targets");
    }
    auto const fibres = p.fibres();
    std::vector<std::size_t> section(X.size());
    for (std::size_t b = 0; b < X.size(); ++b) {
      if (fibres[f(b)].empty()) {
        throw InvalidArgument("check_lifting: p is not surjective");
      }
      section[b] = fibres[f(b)].front();
    }

    constexpr std::size_t    kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> phi(X.size(), kUnset);
    std::vector<Word>        path(X.size());
    std::deque<std::size_t>  queue{x};
    phi[x] = lift_point;
    LiftResult out;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t b = 0; b < X.size(); ++b) {
          bool const  inv = dir == 1;
          std::size_t v   = inv ? X.inv_op(u, b) : X.op(u, b);
          std::size_t t   = inv ? cover.inv_op(phi[u], section[b])
                                : cover.op(phi[u], section[b]);
          Word        w   = path[u] * Word{letter(b, inv)};
          if (phi[v] == kUnset) {
            phi[v]  = t;
            path[v] = std::move(w);
            queue.push_back(v);
          } else if (phi[v] != t) {
            out.witness = {std::move(w), path[v]};
            return out;
          }
        }
      }
    }
    out.lift = QuandleHom(X, cover, std::move(phi));
    return out;
  }

}  // namespace quandelier
