#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgit/error.hpp"

namespace pgit {

// Lattice coordinates are 64-bit with checked arithmetic; anything that can
// grow without bound (polynomial coefficients, dimensions, eliminations) is a
// big integer or a big rational.
using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw HypothesisError("lattice coordinate exceeds 64-bit range");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw HypothesisError("lattice coordinate exceeds 64-bit range");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw HypothesisError("lattice coordinate exceeds 64-bit range");
  return r;
}

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ValidationError("dimension mismatch in pairing");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline int sign_of(Int v) { return (v > 0) - (v < 0); }

inline int sign_of(const BigInt& v) { return v.sign(); }

inline int sign_of(const Rational& v) { return v.sign(); }

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector operator*(const IntVector& v) const {
    if (v.size() != cols_) throw ValidationError("rank mismatch: matrix has " + std::to_string(cols_) +
                                                 " columns, vector has length " + std::to_string(v.size()));
    IntVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s = checked_add(s, checked_mul((*this)(i, j), v[j]));
      out[i] = s;
    }
    return out;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        Int a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = checked_add(out(i, j), checked_mul(a, o(k, j)));
      }
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Dense row-major exact rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Gauss-Jordan inverse over the rationals. Throws on a singular matrix.
inline RationalMatrix exact_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw ValidationError("inverse of a non-square matrix");
  RationalMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw InternalError("singular Cartan matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(pivot, j), a(col, j));
    Rational p = a(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) a(col, j) /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

/// Divides by the gcd of the entries. The zero vector is returned unchanged.
template <class T>
std::vector<T> primitive(std::vector<T> v) {
  T g = 0;
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, BigInt>) {
      g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    } else {
      g = std::gcd(g, x < 0 ? -x : x);
    }
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int x : v) {
      h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline std::string join(const IntVector& v, const std::string& sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace pgit
