#ifndef QUANDELIER_WORD_HPP_
#define QUANDELIER_WORD_HPP_

#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

namespace quandelier {

  // A letter is a signed generator: generator g (0-based) is +(g + 1) and
  // its inverse is -(g + 1).
  using Letter = int;

  constexpr Letter letter(std::size_t generator, bool inverse = false) {
    return inverse ? -static_cast<Letter>(generator + 1)
                   : static_cast<Letter>(generator + 1);
  }
  constexpr std::size_t generator_of(Letter l) {
    return static_cast<std::size_t>(l < 0 ? -l : l) - 1;
  }
  constexpr bool is_inverse(Letter l) {
    return l < 0;
  }

  // Words keep whatever letters they were built from; free reduction only
  // happens through normalized().
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    static Word generator(std::size_t g, int power = 1);

    std::vector<Letter> const& letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Letter operator[](std::size_t i) const noexcept {
      return letters_[i];
    }

    Word inverse() const;
    Word normalized() const;           // free reduction
    Word cyclically_normalized() const;

    // Sum of letter signs: the image under the map sending every
    // generator to 1.
    long degree() const noexcept;
    // Exponent sum of each generator.
    std::vector<long> exponent_sums(std::size_t generator_count) const;

    Word& operator*=(Word const& other);
    friend Word operator*(Word lhs, Word const& rhs) {
      return lhs *= rhs;
    }
    void push_back(Letter l) {
      letters_.push_back(l);
    }

    friend bool operator==(Word const&, Word const&)  = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> letters_;
  };

  std::string to_string(Word const& w);

  struct Presentation {
    std::size_t       generator_count = 0;
    std::vector<Word> relators;

    // Throws InvalidArgument if a relator mentions a missing generator.
    void check() const;
  };

  // Freely reduce every relator, drop empty ones and duplicates (a relator
  // and its inverse or cyclic rotation count as the same).
  Presentation tidy(Presentation const& p);

}  // namespace quandelier

#endif  // QUANDELIER_WORD_HPP_
