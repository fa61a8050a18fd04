#include "quandelier/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "quandelier/error.hpp"

namespace quandelier {

  Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw InvalidArgument("Perm: images do not form a bijection");
      }
      seen[x] = true;
    }
  }

  Perm Perm::identity(std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Perm(std::move(images), Unchecked{});
  }

  Perm Perm::inverse() const {
    std::vector<Point> inv(images_.size());
    for (Point x = 0; x < images_.size(); ++x) {
      inv[images_[x]] = x;
    }
    return Perm(std::move(inv), Unchecked{});
  }

  bool Perm::is_identity() const noexcept {
    for (Point x = 0; x < images_.size(); ++x) {
      if (images_[x] != x) {
        return false;
      }
    }
    return true;
  }

  Perm operator*(Perm const& a, Perm const& b) {
    if (a.degree() != b.degree()) {
      throw InvalidArgument("Perm: degree mismatch in product");
    }
    std::vector<Point> out(a.degree());
    for (Point x = 0; x < a.degree(); ++x) {
      out[x] = b.images_[a.images_[x]];
    }
    return Perm(std::move(out), Perm::Unchecked{});
  }

  std::size_t PermHash::operator()(Perm const& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Point x : p.images()) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::optional<std::size_t> FiniteGroup::index_of(Perm const& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t FiniteGroup::product(std::size_t i, std::size_t j) const {
    return index_.at(elements_.at(i) * elements_.at(j));
  }

  std::size_t FiniteGroup::inverse(std::size_t i) const {
    return index_.at(elements_.at(i).inverse());
  }

  bool FiniteGroup::is_abelian() const {
    for (std::size_t i : generators_) {
      for (std::size_t j : generators_) {
        if (elements_[i] * elements_[j] != elements_[j] * elements_[i]) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteGroup FiniteGroup::from_elements(std::vector<Perm>        elements,
                                         std::vector<std::size_t> generators) {
    if (elements.empty() || !elements.front().is_identity()) {
      throw InvalidArgument("from_elements: first element must be the identity");
    }
    FiniteGroup G;
    G.degree_ = elements.front().degree();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i].degree() != G.degree_
          || !G.index_.try_emplace(elements[i], i).second) {
        throw InvalidArgument("from_elements: repeated or mismatched element");
      }
    }
    G.elements_ = std::move(elements);
    for (std::size_t g : generators) {
      if (g >= G.elements_.size()) {
        throw InvalidArgument("from_elements: generator out of range");
      }
    }
    G.generators_ = std::move(generators);
    // closed under right multiplication by generators and reachable from
    // the identity: together these make the list exactly <generators>
    std::vector<bool>        reached(G.elements_.size(), false);
    std::vector<std::size_t> queue{0};
    reached[0] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (std::size_t g : G.generators_) {
        auto it = G.index_.find(G.elements_[queue[k]] * G.elements_[g]);
        if (it == G.index_.end()) {
          throw InvalidArgument("from_elements: list is not closed");
        }
        if (!reached[it->second]) {
          reached[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    if (queue.size() != G.elements_.size()) {
      throw InvalidArgument("from_elements: generators do not generate the list");
    }
    return G;
  }

  FiniteGroup closure(std::span<Perm const> generators,
                      std::size_t           degree,
                      std::size_t           budget) {
    if (budget == 0) {
      throw InvalidArgument("closure: budget must be at least 1");
    }
    for (Perm const& g : generators) {
      if (g.degree() != degree) {
        throw InvalidArgument("closure: generator degree mismatch");
      }
    }
    FiniteGroup G;
    G.degree_ = degree;
    auto add  = [&G, budget](Perm p) -> std::size_t {
      auto [it, inserted] = G.index_.try_emplace(p, G.elements_.size());
      if (inserted) {
        if (G.elements_.size() + 1 > budget) {
          throw BudgetExceeded("group elements", G.elements_.size() + 1);
        }
        G.elements_.push_back(std::move(p));
      }
      return it->second;
    };
    add(Perm::identity(degree));
    for (std::size_t next = 0; next < G.elements_.size(); ++next) {
      for (Perm const& g : generators) {
        add(G.elements_[next] * g);
      }
    }
    for (Perm const& g : generators) {
      G.generators_.push_back(G.index_.at(g));
    }
    return G;
  }

  std::vector<std::vector<Point>> orbits(FiniteGroup const& group) {
    std::vector<Point> all(group.degree());
    std::iota(all.begin(), all.end(), Point{0});
    return orbits(group, all);
  }

  std::vector<std::vector<Point>> orbits(FiniteGroup const&     group,
                                         std::span<Point const> points) {
    std::vector<Point> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<bool>               seen(group.degree(), false);
    std::vector<std::vector<Point>> result;
    for (Point start : sorted) {
      if (start >= group.degree()) {
        throw InvalidArgument("orbits: point out of range");
      }
      if (seen[start]) {
        continue;
      }
      std::vector<Point> orbit{start};
      seen[start] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (std::size_t gi : group.generators()) {
          Point y = group.element(gi)[orbit[k]];
          if (!seen[y]) {
            seen[y] = true;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      result.push_back(std::move(orbit));
    }
    return result;
  }

  namespace {
    using Bits = std::vector<std::uint64_t>;

    struct Candidate {
      Bits                     members;
      std::vector<std::size_t> gens;
    };

    std::vector<std::size_t> bits_to_indices(Bits const& bits,
                                             std::size_t n) {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < n; ++i) {
        if ((bits[i / 64] >> (i % 64)) & 1U) {
          out.push_back(i);
        }
      }
      return out;
    }
  }  // namespace

  std::vector<std::vector<std::size_t>>
  subgroup_index_sets(FiniteGroup const& group, std::size_t budget) {
    std::size_t const n = group.order();
    if (n > budget) {
      throw BudgetExceeded("subgroup search group order", n);
    }
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = group.product(i, j);
      }
    }
    std::size_t const words = (n + 63) / 64;

    auto generate = [&](std::vector<std::size_t> const& gens) {
      Bits                     bits(words, 0);
      std::vector<std::size_t> queue{group.identity_index()};
      bits[0] |= 1U;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (std::size_t g : gens) {
          std::size_t y = table[queue[k] * n + g];
          if (!((bits[y / 64] >> (y % 64)) & 1U)) {
            bits[y / 64] |= std::uint64_t(1) << (y % 64);
            queue.push_back(y);
          }
        }
      }
      return bits;
    };

    std::vector<Candidate>  found;
    std::map<Bits, std::size_t> seen;
    auto record = [&](Candidate c) {
      if (seen.try_emplace(c.members, found.size()).second) {
        if (found.size() + 1 > budget) {
          throw BudgetExceeded("subgroup count", found.size() + 1);
        }
        found.push_back(std::move(c));
      }
    };

    record({generate({}), {}});
    for (std::size_t g = 0; g < n; ++g) {
      record({generate({g}), {g}});
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<std::size_t> gens = found[i].gens;
        gens.insert(gens.end(), found[j].gens.begin(), found[j].gens.end());
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        // skip the closure when one side already contains the other
        Bits joined(words);
        for (std::size_t w = 0; w < words; ++w) {
          joined[w] = found[i].members[w] | found[j].members[w];
        }
        if (seen.count(joined) != 0) {
          continue;
        }
        record({generate(gens), std::move(gens)});
      }
    }

    std::vector<std::vector<std::size_t>> result;
    result.reserve(found.size());
    for (Candidate const& c : found) {
      result.push_back(bits_to_indices(c.members, n));
    }
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return result;
  }

  std::vector<FiniteGroup> subgroups(FiniteGroup const& group,
                                     std::size_t        budget) {
    std::vector<FiniteGroup> result;
    for (auto const& members : subgroup_index_sets(group, budget)) {
      std::vector<Perm> gens;
      gens.reserve(members.size());
      for (std::size_t i : members) {
        gens.push_back(group.element(i));
      }
      result.push_back(closure(gens, group.degree(), members.size()));
    }
    return result;
  }

  bool is_central(Perm const& element, FiniteGroup const& group) {
    for (std::size_t gi : group.generators()) {
      Perm const& g = group.element(gi);
      if (element * g != g * element) {
        return false;
      }
    }
    return true;
  }

  bool is_normal(FiniteGroup const&           group,
                 std::span<std::size_t const> members) {
    std::vector<bool> in(group.order(), false);
    for (std::size_t m : members) {
      in.at(m) = true;
    }
    for (std::size_t gi : group.generators()) {
      Perm const& g    = group.element(gi);
      Perm const  ginv = g.inverse();
      for (std::size_t m : members) {
        auto idx = group.index_of(ginv * group.element(m) * g);
        if (!idx || !in[*idx]) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace quandelier
