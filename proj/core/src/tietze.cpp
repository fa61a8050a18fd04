#include <algorithm>
#include <numeric>

#include "quandelier/fp_group.hpp"

namespace quandelier {

  namespace {

    Word substitute(Word const& w, std::size_t x, Word const& image) {
      Word const image_inv = image.inverse();
      Word       out;
      for (Letter l : w.letters()) {
        if (generator_of(l) == x) {
          out *= is_inverse(l) ? image_inv : image;
        } else {
          out.push_back(l);
        }
      }
      return out.normalized();
    }

    std::size_t total_length(std::vector<Word> const& ws) {
      std::size_t n = 0;
      for (Word const& w : ws) {
        n += w.size();
      }
      return n;
    }

  }  // namespace

  Simplified simplify(Presentation const& p, std::size_t length_limit) {
    Presentation current = tidy(p);
    Simplified   out;
    for (std::size_t g = 0; g < p.generator_count; ++g) {
      out.substitution.push_back(Word::generator(g));
    }
    std::vector<bool> active(p.generator_count, true);

    for (;;) {
      // shortest relator containing a generator exactly once
      std::size_t best_r = current.relators.size();
      std::size_t best_x = 0;
      for (std::size_t r = 0; r < current.relators.size(); ++r) {
        Word const& w = current.relators[r];
        if (best_r != current.relators.size()
            && w.size() >= current.relators[best_r].size()) {
          continue;
        }
        std::vector<std::size_t> count(p.generator_count, 0);
        for (Letter l : w.letters()) {
          ++count[generator_of(l)];
        }
        for (Letter l : w.letters()) {
          if (count[generator_of(l)] == 1) {
            best_r = r;
            best_x = generator_of(l);
            break;
          }
        }
      }
      if (best_r == current.relators.size()) {
        break;
      }
      // rotate so that x^e is the last letter: w x^e = 1
      Word const& r   = current.relators[best_r];
      std::size_t pos = 0;
      while (generator_of(r[pos]) != best_x) {
        ++pos;
      }
      Word rest;
      for (std::size_t i = 1; i < r.size(); ++i) {
        rest.push_back(r[(pos + i) % r.size()]);
      }
      // x^e = rest^-1
      Word const image = is_inverse(r[pos]) ? rest : rest.inverse();

      std::vector<Word> relators;
      for (std::size_t i = 0; i < current.relators.size(); ++i) {
        if (i != best_r) {
          relators.push_back(substitute(current.relators[i], best_x, image));
        }
      }
      if (total_length(relators) > length_limit) {
        break;
      }
      for (Word& s : out.substitution) {
        s = substitute(s, best_x, image);
      }
      active[best_x]   = false;
      current.relators = std::move(relators);
      current          = tidy(current);
    }

    // renumber surviving generators
    std::vector<std::size_t> renum(p.generator_count, 0);
    std::size_t              next = 0;
    for (std::size_t g = 0; g < p.generator_count; ++g) {
      if (active[g]) {
        renum[g] = next++;
      }
    }
    auto rename = [&](Word const& w) {
      Word o;
      for (Letter l : w.letters()) {
        o.push_back(letter(renum[generator_of(l)], is_inverse(l)));
      }
      return o;
    };
    out.presentation.generator_count = next;
    for (Word const& w : current.relators) {
      out.presentation.relators.push_back(rename(w));
    }
    for (Word& s : out.substitution) {
      s = rename(s);
    }
    return out;
  }

}  // namespace quandelier
