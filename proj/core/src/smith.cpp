#include "quandelier/smith.hpp"

#include <climits>
#include <utility>

#include "quandelier/error.hpp"

namespace quandelier {

  namespace {

    struct Overflow {};

    template <typename T>
    struct Arith;

    template <>
    struct Arith<long long> {
      static long long sub_mul(long long a, long long q, long long b) {
        long long p, r;
        if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) {
          throw Overflow{};
        }
        return r;
      }
      static long long add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) {
          throw Overflow{};
        }
        return r;
      }
      static long long abs(long long a) {
        if (a == LLONG_MIN) {
          throw Overflow{};
        }
        return a < 0 ? -a : a;
      }
      static long long neg(long long a) {
        if (a == LLONG_MIN) {
          throw Overflow{};
        }
        return -a;
      }
    };

    template <>
    struct Arith<Integer> {
      static Integer sub_mul(Integer const& a, Integer const& q, Integer const& b) {
        return a - q * b;
      }
      static Integer add(Integer const& a, Integer const& b) {
        return a + b;
      }
      static Integer abs(Integer const& a) {
        return a < 0 ? Integer(-a) : a;
      }
      static Integer neg(Integer const& a) {
        return -a;
      }
    };

    // In-place reduction of `a` to Smith form.  When `left`/`right` are
    // non-null they accumulate the row/column operations.
    template <typename T>
    void reduce(Matrix<T>& a, Matrix<T>* left, Matrix<T>* right) {
      using A             = Arith<T>;
      std::size_t const m = a.rows(), n = a.cols();

      auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) {
          return;
        }
        for (std::size_t c = 0; c < n; ++c) {
          std::swap(a(i, c), a(j, c));
        }
        if (left) {
          for (std::size_t c = 0; c < m; ++c) {
            std::swap((*left)(i, c), (*left)(j, c));
          }
        }
      };
      auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) {
          return;
        }
        for (std::size_t r = 0; r < m; ++r) {
          std::swap(a(r, i), a(r, j));
        }
        if (right) {
          for (std::size_t r = 0; r < n; ++r) {
            std::swap((*right)(r, i), (*right)(r, j));
          }
        }
      };
      // row_i -= q * row_j
      auto row_op = [&](std::size_t i, std::size_t j, T const& q, std::size_t from) {
        for (std::size_t c = from; c < n; ++c) {
          if (a(j, c) != 0) {
            a(i, c) = A::sub_mul(a(i, c), q, a(j, c));
          }
        }
        if (left) {
          for (std::size_t c = 0; c < m; ++c) {
            if ((*left)(j, c) != 0) {
              (*left)(i, c) = A::sub_mul((*left)(i, c), q, (*left)(j, c));
            }
          }
        }
      };
      // col_i -= q * col_j
      auto col_op = [&](std::size_t i, std::size_t j, T const& q, std::size_t from) {
        for (std::size_t r = from; r < m; ++r) {
          if (a(r, j) != 0) {
            a(r, i) = A::sub_mul(a(r, i), q, a(r, j));
          }
        }
        if (right) {
          for (std::size_t r = 0; r < n; ++r) {
            if ((*right)(r, j) != 0) {
              (*right)(r, i) = A::sub_mul((*right)(r, i), q, (*right)(r, j));
            }
          }
        }
      };

      std::size_t const steps = m < n ? m : n;
      for (std::size_t t = 0; t < steps; ++t) {
        // global minimal pivot in the trailing block
        bool        found = false;
        std::size_t pi = t, pj = t;
        T           best{};
        for (std::size_t i = t; i < m; ++i) {
          for (std::size_t j = t; j < n; ++j) {
            if (a(i, j) != 0) {
              T v = A::abs(a(i, j));
              if (!found || v < best) {
                found = true;
                best  = v;
                pi    = i;
                pj    = j;
              }
            }
          }
        }
        if (!found) {
          break;
        }
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
          bool dirty = false;
          for (std::size_t i = t + 1; i < m; ++i) {
            if (a(i, t) != 0) {
              T q = a(i, t) / a(t, t);
              row_op(i, t, q, t);
              dirty = dirty || a(i, t) != 0;
            }
          }
          for (std::size_t j = t + 1; j < n; ++j) {
            if (a(t, j) != 0) {
              T q = a(t, j) / a(t, t);
              col_op(j, t, q, t);
              dirty = dirty || a(t, j) != 0;
            }
          }
          if (dirty) {
            // move the smallest remainder in row/column t to the pivot
            std::size_t bi = t, bj = t;
            T           bv = A::abs(a(t, t));
            for (std::size_t i = t + 1; i < m; ++i) {
              if (a(i, t) != 0 && A::abs(a(i, t)) < bv) {
                bv = A::abs(a(i, t));
                bi = i;
                bj = t;
              }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
              if (a(t, j) != 0 && A::abs(a(t, j)) < bv) {
                bv = A::abs(a(t, j));
                bi = t;
                bj = j;
              }
            }
            swap_rows(t, bi);
            swap_cols(t, bj);
            continue;
          }
          // divisibility of the trailing block by the pivot
          bool fixed = false;
          for (std::size_t i = t + 1; i < m && !fixed; ++i) {
            for (std::size_t j = t + 1; j < n; ++j) {
              if (a(i, j) != 0 && a(i, j) % a(t, t) != 0) {
                // row_t += row_i
                row_op(t, i, T(-1), t);
                fixed = true;
                break;
              }
            }
          }
          if (!fixed) {
            break;
          }
        }
        if (a(t, t) < 0) {
          for (std::size_t c = t; c < n; ++c) {
            a(t, c) = A::neg(a(t, c));
          }
          if (left) {
            for (std::size_t c = 0; c < m; ++c) {
              (*left)(t, c) = A::neg((*left)(t, c));
            }
          }
        }
      }
    }

    template <typename T>
    std::vector<Integer> diagonal_of(Matrix<T> const& a) {
      std::vector<Integer> out;
      std::size_t const    steps = a.rows() < a.cols() ? a.rows() : a.cols();
      for (std::size_t t = 0; t < steps; ++t) {
        if (a(t, t) != 0) {
          out.emplace_back(a(t, t));
        }
      }
      return out;
    }

  }  // namespace

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw InvalidArgument("matrix product: shape mismatch");
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  SmithForm smith_normal_form(IntMatrix const& m) {
    SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    reduce(s.diagonal, &s.left, &s.right);
    return s;
  }

  std::vector<Integer> elementary_divisors(Matrix<long long> const& m) {
    try {
      Matrix<long long> work = m;
      reduce<long long>(work, nullptr, nullptr);
      return diagonal_of(work);
    } catch (Overflow const&) {
      IntMatrix big(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          big(i, j) = m(i, j);
        }
      }
      return elementary_divisors(big);
    }
  }

  std::vector<Integer> elementary_divisors(IntMatrix const& m) {
    IntMatrix work = m;
    reduce<Integer>(work, nullptr, nullptr);
    return diagonal_of(work);
  }

  Integer determinant(IntMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw InvalidArgument("determinant: matrix is not square");
    }
    std::size_t const n = m.rows();
    if (n == 0) {
      return 1;
    }
    IntMatrix a    = m;
    Integer   sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t r = k + 1;
        while (r < n && a(r, k) == 0) {
          ++r;
        }
        if (r == n) {
          return 0;
        }
        for (std::size_t c = 0; c < n; ++c) {
          std::swap(a(k, c), a(r, c));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

}  // namespace quandelier
