#include <algorithm>
#include <deque>

#include "quandelier/error.hpp"
#include "quandelier/fundamental.hpp"

namespace quandelier {

  PathComplex build_complex(FiniteQuandle const& q) {
    std::size_t const n = q.size();
    PathComplex       k;
    k.n_ = n;
    k.edges_.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        k.edges_.push_back({a, b, q.op(a, b)});
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      k.loop_cells_.push_back({{k.edge_index(a, a), 1}});
    }
    k.square_cells_.reserve(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          k.square_cells_.push_back({
              {k.edge_index(a, b), 1},
              {k.edge_index(q.op(a, b), c), 1},
              {k.edge_index(q.op(a, c), q.op(b, c)), -1},
              {k.edge_index(a, c), -1},
          });
        }
      }
    }
    return k;
  }

  std::optional<std::size_t> PathComplex::walk(std::size_t     start,
                                               EdgePath const& path) const {
    std::size_t at = start;
    for (EdgeStep const& s : path) {
      Edge const& e = edges_.at(s.edge);
      std::size_t from = s.sign > 0 ? e.source : e.target;
      if (from != at) {
        return std::nullopt;
      }
      at = s.sign > 0 ? e.target : e.source;
    }
    return at;
  }

  bool PathComplex::is_closed(EdgePath const& path) const {
    if (path.empty()) {
      return true;
    }
    Edge const& first = edges_.at(path.front().edge);
    std::size_t start = path.front().sign > 0 ? first.source : first.target;
    auto        end   = walk(start, path);
    return end && *end == start;
  }

  namespace {
    std::vector<bool> membership(std::size_t n,
                                 std::span<std::size_t const> vertices) {
      std::vector<bool> in(n, false);
      for (std::size_t v : vertices) {
        if (v >= n) {
          throw InvalidArgument("boundary: vertex out of range");
        }
        in[v] = true;
      }
      return in;
    }
  }  // namespace

  Matrix<long long>
  PathComplex::boundary1(std::span<std::size_t const> vertices) const {
    auto const in = membership(n_, vertices);
    std::vector<std::size_t> column(n_, 0);
    std::size_t              cols = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (in[v]) {
        column[v] = cols++;
      }
    }
    std::size_t       rows = 0;
    Matrix<long long> m(cols * n_, cols);
    for (Edge const& e : edges_) {
      if (in[e.source]) {
        m(rows, column[e.target]) += 1;
        m(rows, column[e.source]) -= 1;
        ++rows;
      }
    }
    return m;
  }

  Matrix<long long>
  PathComplex::boundary2(std::span<std::size_t const> vertices) const {
    auto const in = membership(n_, vertices);
    std::vector<std::size_t> column(edges_.size(), 0);
    std::size_t              cols = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (in[edges_[e].source]) {
        column[e] = cols++;
      }
    }
    std::size_t cells = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      if (in[a]) {
        cells += 1 + n_ * n_;
      }
    }
    Matrix<long long> m(cells, cols);
    std::size_t       row = 0;
    auto add = [&](EdgePath const& cell) {
      for (EdgeStep const& s : cell) {
        m(row, column[s.edge]) += s.sign;
      }
      ++row;
    };
    for (std::size_t a = 0; a < n_; ++a) {
      if (in[a]) {
        add(loop_cells_[a]);
      }
    }
    for (std::size_t c = 0; c < square_cells_.size(); ++c) {
      if (in[c / (n_ * n_)]) {
        add(square_cells_[c]);
      }
    }
    return m;
  }

  Word Pi1Presentation::loop_word(std::size_t          generator,
                                  FiniteQuandle const& q) const {
    std::size_t const e = generator_edges.at(generator);
    std::size_t const a = e / q.size();
    std::size_t const b = e % q.size();
    Word w = tree_path.at(a);
    w.push_back(letter(b));
    w *= tree_path.at(q.op(a, b)).inverse();
    return w;
  }

  Pi1Presentation pi1_presentation(FiniteQuandle const& q,
                                   std::size_t          basepoint) {
    std::size_t const n = q.size();
    if (basepoint >= n) {
      throw InvalidArgument("pi1_presentation: basepoint out of range");
    }
    Pi1Presentation out;
    out.basepoint = basepoint;
    out.vertices  = q.components().parts[q.component_of(basepoint)];
    out.tree_path.assign(n, Word{});

    std::vector<bool> visited(n, false);
    std::vector<bool> tree(n * n, false);
    std::deque<std::size_t> queue{basepoint};
    visited[basepoint] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t v = q.op(u, b);
        if (!visited[v]) {
          visited[v] = true;
          tree[u * n + b] = true;
          out.tree_path[v] = out.tree_path[u] * Word{letter(b)};
          queue.push_back(v);
        }
      }
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t v = q.inv_op(u, b);
        if (!visited[v]) {
          visited[v] = true;
          tree[v * n + b] = true;
          out.tree_path[v] = out.tree_path[u] * Word{letter(b, true)};
          queue.push_back(v);
        }
      }
    }

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> gen(n * n, kNone);
    for (std::size_t a : out.vertices) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!tree[a * n + b]) {
          gen[a * n + b] = out.generator_edges.size();
          out.generator_edges.push_back(a * n + b);
        }
      }
    }
    out.presentation.generator_count = out.generator_edges.size();

    PathComplex const k = build_complex(q);
    auto rewrite = [&](EdgePath const& cell) {
      Word w;
      for (EdgeStep const& s : cell) {
        if (gen[s.edge] != kNone) {
          w.push_back(letter(gen[s.edge], s.sign < 0));
        }
      }
      return w;
    };
    for (std::size_t a : out.vertices) {
      out.presentation.relators.push_back(rewrite(k.loop_cells()[a]));
      for (std::size_t bc = 0; bc < n * n; ++bc) {
        out.presentation.relators.push_back(
            rewrite(k.square_cells()[a * n * n + bc]));
      }
    }
    out.presentation = tidy(out.presentation);
    return out;
  }

}  // namespace quandelier
