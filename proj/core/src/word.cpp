#include "quandelier/word.hpp"

#include <algorithm>
#include <set>

#include "quandelier/error.hpp"

namespace quandelier {

  Word Word::generator(std::size_t g, int power) {
    Word w;
    for (int i = 0; i < std::abs(power); ++i) {
      w.letters_.push_back(letter(g, power < 0));
    }
    return w;
  }

  Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(-*it);
    }
    return w;
  }

  Word Word::normalized() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (Letter l : letters_) {
      if (!out.empty() && out.back() == -l) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return Word(std::move(out));
  }

  Word Word::cyclically_normalized() const {
    std::vector<Letter> w = normalized().letters_;
    std::size_t         i = 0, j = w.size();
    while (j - i >= 2 && w[i] == -w[j - 1]) {
      ++i;
      --j;
    }
    return Word(std::vector<Letter>(w.begin() + i, w.begin() + j));
  }

  long Word::degree() const noexcept {
    long d = 0;
    for (Letter l : letters_) {
      d += is_inverse(l) ? -1 : 1;
    }
    return d;
  }

  std::vector<long> Word::exponent_sums(std::size_t generator_count) const {
    std::vector<long> sums(generator_count, 0);
    for (Letter l : letters_) {
      sums.at(generator_of(l)) += is_inverse(l) ? -1 : 1;
    }
    return sums;
  }

  Word& Word::operator*=(Word const& other) {
    letters_.insert(letters_.end(), other.letters_.begin(),
                    other.letters_.end());
    return *this;
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) {
        s += ' ';
      }
      s += 'x' + std::to_string(generator_of(w[i]));
      if (is_inverse(w[i])) {
        s += "^-1";
      }
    }
    return s;
  }

  void Presentation::check() const {
    for (Word const& r : relators) {
      for (Letter l : r.letters()) {
        if (l == 0 || generator_of(l) >= generator_count) {
          throw InvalidArgument("relator references a missing generator");
        }
      }
    }
  }

  namespace {
    // Smallest rotation of w or of its inverse; identifies relators that
    // define the same normal closure trivially.
    std::vector<Letter> canonical(Word const& w) {
      std::vector<Letter> best;
      for (Word const& v : {w, w.inverse()}) {
        auto const& ls = v.letters();
        for (std::size_t r = 0; r < ls.size(); ++r) {
          std::vector<Letter> rot(ls.begin() + r, ls.end());
          rot.insert(rot.end(), ls.begin(), ls.begin() + r);
          if (best.empty() || rot < best) {
            best = std::move(rot);
          }
        }
      }
      return best;
    }
  }  // namespace

  Presentation tidy(Presentation const& p) {
    p.check();
    Presentation                    out{p.generator_count, {}};
    std::set<std::vector<Letter>>   seen;
    for (Word const& r : p.relators) {
      Word w = r.cyclically_normalized();
      if (w.empty()) {
        continue;
      }
      if (seen.insert(canonical(w)).second) {
        out.relators.push_back(std::move(w));
      }
    }
    return out;
  }

}  // namespace quandelier
