#ifndef QUANDELIER_SMITH_HPP_
#define QUANDELIER_SMITH_HPP_

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quandelier {

  using Integer = boost::multiprecision::cpp_int;

  // Dense row-major matrix.
  template <typename T>
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = T(1);
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    T& operator()(std::size_t r, std::size_t c) noexcept {
      return data_[r * cols_ + c];
    }
    T const& operator()(std::size_t r, std::size_t c) const noexcept {
      return data_[r * cols_ + c];
    }

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t    rows_ = 0;
    std::size_t    cols_ = 0;
    std::vector<T> data_;
  };

  using IntMatrix = Matrix<Integer>;

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);

  struct SmithForm {
    IntMatrix diagonal;  // same shape as the input
    IntMatrix left;      // rows x rows, unimodular
    IntMatrix right;     // cols x cols, unimodular
  };

  // left * M * right == diagonal, with diagonal entries d_1 | d_2 | ...,
  // all nonnegative.  Pivots are chosen by minimal absolute value.
  SmithForm smith_normal_form(IntMatrix const& m);

  // Only the nonzero diagonal entries of the Smith form, ascending in
  // divisibility order (no transforms).  Runs on 64-bit integers and
  // restarts with arbitrary precision if an intermediate overflows.
  std::vector<Integer> elementary_divisors(Matrix<long long> const& m);
  std::vector<Integer> elementary_divisors(IntMatrix const& m);

  Integer determinant(IntMatrix const& m);  // Bareiss; square input only

}  // namespace quandelier

#endif  // QUANDELIER_SMITH_HPP_
