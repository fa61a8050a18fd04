#include <algorithm>

#include "quandelier/error.hpp"
#include "quandelier/fundamental.hpp"

namespace quandelier {

  CoveringEnumeration
  enumerate_connected_coverings(FiniteQuandle const& q,
                                std::size_t          basepoint,
                                Budgets const&       budgets) {
    if (!q.is_connected()) {
      throw InvalidArgument("enumerate_connected_coverings: Q is not connected");
    }
    std::size_t const   bp[] = {basepoint};
    FiniteQuandle const qb   = q.with_basepoints(bp);

    CoveringEnumeration out;
    out.pi1 = fundamental_group(qb, basepoint, budgets.cosets);
    if (!out.pi1.finite_form) {
      throw BudgetExceeded(out.pi1.budget_failure->quantity,
                           out.pi1.budget_failure->reached);
    }
    out.universal = universal_cover(qb, budgets.cosets);

    FiniteGroup const&     pi1   = *out.pi1.finite_form;
    CoverPiece const&      piece = out.universal.pieces.front();
    Adj0Enumeration const& en    = piece.enumeration;
    FiniteQuandle const&   cover = out.universal.cover();

    for (auto const& members :
         subgroup_index_sets(pi1, budgets.subgroup_order)) {
      std::vector<std::size_t> classes(cover.size());
      for (std::size_t c = 0; c < cover.size(); ++c) {
        std::size_t least = c;
        for (std::size_t k : members) {
          least = std::min(least, en.multiply(out.pi1.elements[k], c));
        }
        classes[c] = least;
      }
      auto [quot, map] = quotient(cover, classes);
      std::vector<std::size_t> projection(quot.size());
      for (std::size_t c = 0; c < cover.size(); ++c) {
        projection[map[c]] = out.universal.projection(c);
      }
      ConnectedCovering cc;
      cc.subgroup  = members;
      cc.base_lift = map[0];
      cc.fibre     = pi1.order() / members.size();
      cc.galois    = is_normal(pi1, members);
      cc.covering  = QuandleHom(std::move(quot), qb, std::move(projection));
      out.coverings.push_back(std::move(cc));
    }
    return out;
  }

}  // namespace quandelier
