#include "quandelier/todd_coxeter.hpp"

#include <cstdint>
#include <limits>

#include "quandelier/error.hpp"

namespace quandelier {

  namespace {

    constexpr std::int32_t kUndefined = -1;

    class Enumerator {
     public:
      Enumerator(Presentation const& p, std::size_t budget)
          : relators_(p.relators),
            columns_(2 * p.generator_count),
            budget_(budget) {
        if (budget_ > static_cast<std::size_t>(
                std::numeric_limits<std::int32_t>::max() / 4)) {
          budget_ = std::numeric_limits<std::int32_t>::max() / 4;
        }
        new_row();
        live_ = 1;
      }

      void run(std::span<Word const> subgroup) {
        for (Word const& w : subgroup) {
          scan_and_fill(0, w);
        }
        std::size_t alpha = 0;
        while (alpha < rows()) {
          if (alive(alpha)) {
            for (Word const& w : relators_) {
              scan_and_fill(static_cast<std::int32_t>(alpha), w);
              if (!alive(alpha)) {
                break;
              }
            }
            if (alive(alpha)) {
              for (std::size_t x = 0; x < columns_; ++x) {
                if (entry(alpha, x) == kUndefined) {
                  define(static_cast<std::int32_t>(alpha), x);
                }
              }
            }
          }
          ++alpha;
          if (rows() > 2 * live_ + 4096) {
            alpha = compress(alpha);
          }
        }
      }

      std::size_t rows() const noexcept {
        return parent_.size();
      }
      std::int32_t entry(std::size_t coset, std::size_t col) const noexcept {
        return table_[coset * columns_ + col];
      }

      // Renumbers the live cosets in order; returns the new index of the
      // first live coset at or after `from`.
      std::size_t compress(std::size_t from) {
        std::vector<std::int32_t> renum(rows(), kUndefined);
        std::int32_t              next = 0;
        for (std::size_t c = 0; c < rows(); ++c) {
          if (alive(c)) {
            renum[c] = next++;
          }
        }
        std::size_t new_from = static_cast<std::size_t>(next);
        for (std::size_t c = from; c < rows(); ++c) {
          if (alive(c)) {
            new_from = static_cast<std::size_t>(renum[c]);
            break;
          }
        }
        std::vector<std::int32_t> table;
        table.reserve(static_cast<std::size_t>(next) * columns_);
        for (std::size_t c = 0; c < rows(); ++c) {
          if (!alive(c)) {
            continue;
          }
          for (std::size_t x = 0; x < columns_; ++x) {
            std::int32_t e = entry(c, x);
            table.push_back(e == kUndefined ? kUndefined : renum[e]);
          }
        }
        table_ = std::move(table);
        parent_.resize(static_cast<std::size_t>(next));
        for (std::int32_t c = 0; c < next; ++c) {
          parent_[c] = c;
        }
        return new_from;
      }

      std::size_t columns() const noexcept {
        return columns_;
      }

     private:
      static std::size_t inverse_column(std::size_t x) noexcept {
        return x ^ 1U;
      }
      static std::size_t column(Letter l) noexcept {
        return 2 * generator_of(l) + (is_inverse(l) ? 1 : 0);
      }

      bool alive(std::size_t c) const noexcept {
        return parent_[c] == static_cast<std::int32_t>(c);
      }
      std::int32_t& at(std::int32_t coset, std::size_t col) noexcept {
        return table_[static_cast<std::size_t>(coset) * columns_ + col];
      }

      void new_row() {
        parent_.push_back(static_cast<std::int32_t>(parent_.size()));
        table_.resize(table_.size() + columns_, kUndefined);
      }

      void define(std::int32_t coset, std::size_t x) {
        if (live_ + 1 > budget_) {
          throw BudgetExceeded("cosets", live_);
        }
        auto const fresh = static_cast<std::int32_t>(rows());
        new_row();
        ++live_;
        at(coset, x)                = fresh;
        at(fresh, inverse_column(x)) = coset;
      }

      std::int32_t rep(std::int32_t k) {
        std::int32_t root = k;
        while (parent_[root] != root) {
          root = parent_[root];
        }
        while (parent_[k] != root) {
          std::int32_t next = parent_[k];
          parent_[k]        = root;
          k                 = next;
        }
        return root;
      }

      void merge(std::int32_t k, std::int32_t l) {
        std::int32_t phi = rep(k), psi = rep(l);
        if (phi == psi) {
          return;
        }
        std::int32_t mu = phi < psi ? phi : psi;
        std::int32_t nu = phi < psi ? psi : phi;
        parent_[nu]     = mu;
        --live_;
        queue_.push_back(nu);
      }

      void coincidence(std::int32_t a, std::int32_t b) {
        queue_.clear();
        merge(a, b);
        for (std::size_t i = 0; i < queue_.size(); ++i) {
          std::int32_t const gamma = queue_[i];
          for (std::size_t x = 0; x < columns_; ++x) {
            std::int32_t const delta = at(gamma, x);
            if (delta == kUndefined) {
              continue;
            }
            at(delta, inverse_column(x)) = kUndefined;
            std::int32_t const mu        = rep(gamma);
            std::int32_t const nu        = rep(delta);
            if (at(mu, x) != kUndefined) {
              merge(nu, at(mu, x));
            } else if (at(nu, inverse_column(x)) != kUndefined) {
              merge(mu, at(nu, inverse_column(x)));
            } else {
              at(mu, x)                 = nu;
              at(nu, inverse_column(x)) = mu;
            }
          }
        }
      }

      void scan_and_fill(std::int32_t alpha, Word const& w) {
        if (w.empty()) {
          return;
        }
        auto const&  ls = w.letters();
        std::int32_t f  = alpha;
        std::int32_t b  = alpha;
        std::size_t  i  = 0;
        std::size_t  j  = ls.size();  // scan covers letters [i, j)
        for (;;) {
          while (i < j && at(f, column(ls[i])) != kUndefined) {
            f = at(f, column(ls[i]));
            ++i;
          }
          if (i == j) {
            if (f != alpha) {
              coincidence(f, alpha);
            }
            return;
          }
          while (j > i && at(b, inverse_column(column(ls[j - 1]))) != kUndefined) {
            b = at(b, inverse_column(column(ls[j - 1])));
            --j;
          }
          if (j == i) {
            coincidence(f, b);
            return;
          }
          if (j == i + 1) {
            std::size_t const x         = column(ls[i]);
            at(f, x)                    = b;
            at(b, inverse_column(x))    = f;
            return;
          }
          define(f, column(ls[i]));
        }
      }

      std::vector<Word> const&  relators_;
      std::size_t               columns_;
      std::size_t               budget_;
      std::size_t               live_ = 0;
      std::vector<std::int32_t> table_;
      std::vector<std::int32_t> parent_;
      std::vector<std::int32_t> queue_;
    };

  }  // namespace

  CosetTable todd_coxeter(Presentation const&   p,
                          std::span<Word const> subgroup_generators,
                          std::size_t           budget) {
    if (budget == 0) {
      throw InvalidArgument("todd_coxeter: budget must be at least 1");
    }
    p.check();
    for (Word const& w : subgroup_generators) {
      for (Letter l : w.letters()) {
        if (l == 0 || generator_of(l) >= p.generator_count) {
          throw InvalidArgument("subgroup word references a missing generator");
        }
      }
    }
    Enumerator e(p, budget);
    e.run(subgroup_generators);
    e.compress(0);

    CosetTable out;
    out.cosets_     = e.rows();
    out.generators_ = p.generator_count;
    out.table_.resize(e.rows() * e.columns());
    for (std::size_t c = 0; c < e.rows(); ++c) {
      for (std::size_t x = 0; x < e.columns(); ++x) {
        std::int32_t v = e.entry(c, x);
        if (v == kUndefined) {
          throw Error("todd_coxeter: incomplete table after enumeration");
        }
        out.table_[c * e.columns() + x] = static_cast<std::size_t>(v);
      }
    }
    out.representatives_.assign(out.cosets_, Word{});
    std::vector<bool>        seen(out.cosets_, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      std::size_t const c = queue[k];
      for (std::size_t x = 0; x < e.columns(); ++x) {
        std::size_t const d = out.table_[c * e.columns() + x];
        if (!seen[d]) {
          seen[d]                 = true;
          out.representatives_[d] = out.representatives_[c];
          out.representatives_[d].push_back(letter(x / 2, x % 2 == 1));
          queue.push_back(d);
        }
      }
    }
    return out;
  }

  bool CosetTable::is_consistent(Presentation const&   p,
                                 std::span<Word const> subgroup) const {
    if (p.generator_count != generators_) {
      return false;
    }
    for (std::size_t x = 0; x < 2 * generators_; ++x) {
      std::vector<bool> hit(cosets_, false);
      for (std::size_t c = 0; c < cosets_; ++c) {
        std::size_t d = table_[c * 2 * generators_ + x];
        if (d >= cosets_ || hit[d] || table_[d * 2 * generators_ + (x ^ 1U)] != c) {
          return false;
        }
        hit[d] = true;
      }
    }
    for (Word const& r : p.relators) {
      for (std::size_t c = 0; c < cosets_; ++c) {
        if (trace(c, r) != c) {
          return false;
        }
      }
    }
    for (Word const& w : subgroup) {
      if (trace(0, w) != 0) {
        return false;
      }
    }
    for (std::size_t c = 0; c < cosets_; ++c) {
      if (trace(0, representatives_[c]) != c) {
        return false;
      }
    }
    return true;
  }

}  // namespace quandelier
