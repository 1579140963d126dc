#pragma once

// Dense square matrices over a ring element type R. Matrix<R> is itself a
// RingElement, so matrices of matrices (block matrices) work unchanged.

#include <array>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

#include "ctrep/error.hpp"
#include "ctrep/ring.hpp"

namespace ctrep {

template <RingElement R>
class Matrix {
 public:
  using value_type = R;

  /// n x n matrix with every entry equal to fill; fill also fixes the ring.
  Matrix(std::size_t n, const R& fill) : n_(n), entries_(n * n, fill) {
    if (n == 0) throw Error("matrix dimension must be positive");
  }

  static Matrix zero(std::size_t n, const R& like) { return Matrix(n, zero_like(like)); }

  static Matrix identity(std::size_t n, const R& like) {
    Matrix a = zero(n, like);
    const R one = one_like(like);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = one;
    return a;
  }

  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    if (rows.empty()) throw Error("matrix dimension must be positive");
    Matrix a(rows.size(), zero_like(rows[0].at(0)));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw Error("matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = rows[i][j];
    }
    return a;
  }

  std::size_t size() const noexcept { return n_; }

  R& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  R& at(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw Error("matrix index out of range");
    return (*this)(i, j);
  }
  const R& at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw Error("matrix index out of range");
    return (*this)(i, j);
  }

  /// A zero of the entry ring.
  R entry_zero() const { return zero_like(entries_[0]); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] = a.entries_[k] + b.entries_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] = a.entries_[k] - b.entries_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.entries_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    Matrix r = zero(n, a.entries_[0]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const R& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const R& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          r(i, j) = r(i, j) + aik * bkj;
        }
      }
    }
    return r;
  }

  Matrix& operator+=(const Matrix& b) { return *this = *this + b; }
  Matrix& operator*=(const Matrix& b) { return *this = *this * b; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  friend Matrix zero_like(const Matrix& x) { return zero(x.n_, x.entries_[0]); }
  friend Matrix one_like(const Matrix& x) { return identity(x.n_, x.entries_[0]); }
  friend Matrix embed_scalar(const Matrix& x, const Rational& c) {
    Matrix a = zero(x.n_, x.entries_[0]);
    const R s = embed_scalar(x.entries_[0], c);
    for (std::size_t i = 0; i < x.n_; ++i) a(i, i) = s;
    return a;
  }
  friend Matrix scale(const Matrix& x, const Rational& c) {
    Matrix r = x;
    for (auto& e : r.entries_) e = scale(e, c);
    return r;
  }
  friend bool is_zero(const Matrix& x) {
    for (const auto& e : x.entries_) {
      if (!is_zero(e)) return false;
    }
    return true;
  }
  /// c * I for some c in Q.
  friend bool is_scalar(const Matrix& x) {
    for (std::size_t i = 0; i < x.n_; ++i) {
      for (std::size_t j = 0; j < x.n_; ++j) {
        if (i != j && !is_zero(x(i, j))) return false;
      }
    }
    if (!is_scalar(x(0, 0))) return false;
    for (std::size_t i = 1; i < x.n_; ++i) {
      if (!(x(i, i) == x(0, 0))) return false;
    }
    return true;
  }
  friend Rational scalar_value(const Matrix& x) {
    if (!is_scalar(x)) throw Error("matrix is not a scalar");
    return scalar_value(x(0, 0));
  }

 private:
  void check_same(const Matrix& b) const {
    if (n_ != b.n_) throw Error("matrix dimension mismatch");
  }

  std::size_t n_;
  std::vector<R> entries_;
};

template <RingElement R>
R trace(const Matrix<R>& a) {
  R s = a(0, 0);
  for (std::size_t i = 1; i < a.size(); ++i) s = s + a(i, i);
  return s;
}

/// Entrywise image under f; f fixes the target ring.
template <RingElement R, class F>
auto map_entries(const Matrix<R>& a, F&& f) -> Matrix<std::invoke_result_t<F&, const R&>> {
  using S = std::invoke_result_t<F&, const R&>;
  Matrix<S> r(a.size(), f(a(0, 0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = f(a(i, j));
  }
  return r;
}

/// M_n(M_t(R)) -> M_{nt}(R).
template <RingElement R>
Matrix<R> flatten(const Matrix<Matrix<R>>& blocks) {
  const std::size_t n = blocks.size();
  const std::size_t t = blocks(0, 0).size();
  Matrix<R> r(n * t, blocks(0, 0).entry_zero());
  for (std::size_t bi = 0; bi < n; ++bi) {
    for (std::size_t bj = 0; bj < n; ++bj) {
      const Matrix<R>& b = blocks(bi, bj);
      if (b.size() != t) throw Error("inhomogeneous block sizes");
      for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) r(bi * t + i, bj * t + j) = b(i, j);
      }
    }
  }
  return r;
}

/// [[top_left, top_right], [bottom_left, bottom_right]] as a 2t x 2t matrix.
template <RingElement R>
Matrix<R> block_compose(const std::array<std::array<Matrix<R>, 2>, 2>& blocks) {
  const std::size_t t = blocks[0][0].size();
  Matrix<R> r(2 * t, blocks[0][0].entry_zero());
  for (std::size_t bi = 0; bi < 2; ++bi) {
    for (std::size_t bj = 0; bj < 2; ++bj) {
      const Matrix<R>& b = blocks[bi][bj];
      if (b.size() != t) throw Error("inhomogeneous block sizes");
      for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) r(bi * t + i, bj * t + j) = b(i, j);
      }
    }
  }
  return r;
}

/// A^N + c_1 A^{N-1} + ... + c_N I for coeffs = [1, c_1, ..., c_N] (Horner).
template <RingElement R>
Matrix<R> evaluate_monic(const std::vector<Rational>& coeffs, const Matrix<R>& a) {
  if (coeffs.empty()) throw Error("empty polynomial");
  Matrix<R> acc = embed_scalar(a, coeffs[0]);
  for (std::size_t k = 1; k < coeffs.size(); ++k) acc = acc * a + embed_scalar(a, coeffs[k]);
  return acc;
}

}  // namespace ctrep
