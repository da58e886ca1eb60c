#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pgit/cartan_type.hpp"
#include "pgit/error.hpp"
#include "pgit/numeric.hpp"

namespace pgit {

/// Integral weight in fundamental-weight coordinates, lambda = sum lambda_i omega_i.
struct Weight {
  IntVector coords;

  Weight() = default;
  explicit Weight(IntVector c) : coords(std::move(c)) {}
  Weight(std::initializer_list<Int> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Int x) { return x == 0; });
  }
  bool is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](Int x) { return x >= 0; });
  }
  bool is_strictly_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](Int x) { return x > 0; });
  }

  Weight scaled(Int k) const {
    Weight w = *this;
    for (auto& x : w.coords) x = checked_mul(x, k);
    return w;
  }

  std::string to_string() const { return join(coords); }

  auto operator<=>(const Weight&) const = default;
};

/// Exact rational weight, used for chamber representatives.
struct RationalWeight {
  std::vector<Rational> coords;

  /// Scales to the primitive integer vector on the same ray.
  IntVector primitive_integer() const {
    BigInt l = 1;
    for (const auto& c : coords) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    std::vector<BigInt> v;
    for (const auto& c : coords) v.push_back(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c)));
    v = primitive(std::move(v));
    IntVector out;
    for (const auto& x : v) {
      if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
        throw HypothesisError("representative exceeds 64-bit range");
      out.push_back(static_cast<Int>(x));
    }
    return out;
  }
};

/// Exact data of a semisimple root system in Bourbaki numbering.
///
/// Convention: cartan(i, j) = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i),
/// so column j holds the fundamental-weight coordinates of alpha_j.
class RootSystem {
 public:
  const CartanType& type() const { return type_; }
  std::size_t rank() const { return cartan_.rows(); }
  const IntMatrix& cartan() const { return cartan_; }
  const RationalMatrix& cartan_inv() const { return cartan_inv_; }

  /// Positive roots in simple-root coordinates, sorted by (height, coordinates).
  const std::vector<IntVector>& positive_roots() const { return positive_roots_; }
  /// Positive coroots in simple-coroot coordinates; entry k is the coroot of positive_roots()[k].
  const std::vector<IntVector>& positive_coroots() const { return positive_coroots_; }
  /// Positive roots in fundamental-weight coordinates.
  const std::vector<IntVector>& positive_root_weights() const { return root_weights_; }

  std::size_t num_positive_roots() const { return positive_roots_.size(); }
  const Weight& rho() const { return rho_; }

  /// d_i = (alpha_i, alpha_i)/2 normalized so the short roots of each component have d = 1.
  const IntVector& root_length_factors() const { return length_factors_; }

  /// First node index of each component, plus rank() as a sentinel.
  const std::vector<std::size_t>& component_offsets() const { return offsets_; }

  std::size_t component_of(std::size_t node) const {
    for (std::size_t c = 0; c + 1 < offsets_.size(); ++c)
      if (node < offsets_[c + 1]) return c;
    throw ValidationError("node index out of range");
  }

  /// Simple root alpha_i in fundamental-weight coordinates (column i of the Cartan matrix).
  IntVector simple_root_weight(std::size_t i) const { return cartan_.column(i); }

  /// Symmetric bilinear form on fundamental-weight coordinates:
  /// (omega_i, omega_j) = cartan_inv(i, j) * d_i.
  Rational inner_product(const IntVector& a, const IntVector& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) {
        if (b[j] == 0) continue;
        s += Rational(a[i]) * b[j] * cartan_inv_(i, j) * length_factors_[i];
      }
    }
    return s;
  }

  friend RootSystem build_root_system(const CartanType& type);

 private:
  CartanType type_;
  IntMatrix cartan_;
  RationalMatrix cartan_inv_;
  std::vector<IntVector> positive_roots_;
  std::vector<IntVector> positive_coroots_;
  std::vector<IntVector> root_weights_;
  Weight rho_;
  IntVector length_factors_;
  std::vector<std::size_t> offsets_;
};

namespace detail {

inline IntMatrix component_cartan(const SimpleComponent& c) {
  const std::size_t n = static_cast<std::size_t>(c.rank);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = -1; };
  switch (c.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;
      break;
    case Family::G:
      a(0, 1) = -3;  // alpha_1 short
      a(1, 0) = -1;
      break;
  }
  return a;
}

/// Positive roots of the system with Cartan matrix `a`, in simple-root
/// coordinates, by closure under adding simple roots (alpha_i-strings).
inline std::vector<IntVector> positive_root_closure(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::set<IntVector> known;
  std::vector<IntVector> level;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    level.push_back(e);
    known.insert(e);
  }
  std::vector<IntVector> all = level;
  while (!level.empty()) {
    std::set<IntVector> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        // p = length of the downward alpha_i-string from beta
        Int p = 0;
        IntVector down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        Int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += a(i, j) * beta[j];
        if (p - pairing > 0) {
          IntVector up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) {
      known.insert(r);
      all.push_back(r);
    }
  }
  return all;
}

inline Int height(const IntVector& v) {
  Int h = 0;
  for (Int x : v) h += x;
  return h;
}

}  // namespace detail

inline RootSystem build_root_system(const CartanType& type) {
  RootSystem rs;
  rs.type_ = type;
  const std::size_t n = static_cast<std::size_t>(type.rank());
  rs.cartan_ = IntMatrix(n, n);
  rs.length_factors_.assign(n, 1);
  std::size_t off = 0;
  for (const auto& comp : type.components()) {
    rs.offsets_.push_back(off);
    IntMatrix block = detail::component_cartan(comp);
    const std::size_t m = block.rows();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) rs.cartan_(off + i, off + j) = block(i, j);

    // symmetrizer: d_i a_ij = d_j a_ji along the (connected) Dynkin diagram
    std::vector<Rational> d(m, Rational(0));
    d[0] = 1;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || block(i, j) == 0 || d[j] != 0) continue;
        d[j] = d[i] * block(i, j) / block(j, i);
        stack.push_back(j);
      }
    }
    Rational dmin = *std::min_element(d.begin(), d.end());
    for (std::size_t i = 0; i < m; ++i) {
      Rational r = d[i] / dmin;
      if (boost::multiprecision::denominator(r) != 1) throw InternalError("non-integral root length ratio");
      rs.length_factors_[off + i] = static_cast<Int>(boost::multiprecision::numerator(r));
    }
    off += m;
  }
  rs.offsets_.push_back(off);
  rs.cartan_inv_ = exact_inverse(rs.cartan_);

  rs.positive_roots_ = detail::positive_root_closure(rs.cartan_);
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(), [](const IntVector& x, const IntVector& y) {
    Int hx = detail::height(x), hy = detail::height(y);
    return hx != hy ? hx < hy : x > y;
  });
  const std::set<IntVector> dual(
      [&] {
        auto v = detail::positive_root_closure(rs.cartan_.transpose());
        return std::set<IntVector>(v.begin(), v.end());
      }());
  if (dual.size() != rs.positive_roots_.size()) throw InternalError("root and coroot counts differ");

  for (const auto& beta : rs.positive_roots_) {
    IntVector wt = rs.cartan_ * beta;
    rs.root_weights_.push_back(wt);
    // (beta, beta) = sum c_i d_i <beta, alpha_i^vee>; coroot_i = c_i d_i / d_beta
    Int norm2 = 0;
    for (std::size_t i = 0; i < n; ++i) norm2 += beta[i] * rs.length_factors_[i] * wt[i];
    IntVector coroot(n);
    for (std::size_t i = 0; i < n; ++i) {
      Int num = 2 * beta[i] * rs.length_factors_[i];
      if (num % norm2 != 0) throw InternalError("non-integral coroot");
      coroot[i] = num / norm2;
    }
    if (!dual.count(coroot)) throw InternalError("coroot missing from the dual closure");
    rs.positive_coroots_.push_back(coroot);
  }
  rs.rho_ = Weight(IntVector(n, 1));
  return rs;
}

/// <lambda, coroot> for a coroot given in simple-coroot coordinates.
inline Int pair_coroot(const RootSystem& rs, const Weight& lambda, const IntVector& coroot) {
  if (lambda.size() != rs.rank() || coroot.size() != rs.rank())
    throw ValidationError("dimension mismatch: rank is " + std::to_string(rs.rank()));
  return dot(lambda.coords, coroot);
}

/// s_i(lambda) = lambda - lambda_i alpha_i, with 0-based node index i.
inline Weight reflect_simple(const RootSystem& rs, const Weight& lambda, std::size_t i) {
  if (i >= rs.rank()) throw ValidationError("node index " + std::to_string(i) + " out of range");
  if (lambda.size() != rs.rank()) throw ValidationError("dimension mismatch: rank is " + std::to_string(rs.rank()));
  Weight out = lambda;
  const Int li = lambda[i];
  if (li == 0) return out;
  for (std::size_t k = 0; k < rs.rank(); ++k) out.coords[k] = checked_sub(out.coords[k], checked_mul(li, rs.cartan()(k, i)));
  return out;
}

/// Weyl dimension formula, prod <lambda+rho, a^vee> / <rho, a^vee> over positive coroots.
inline BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank()) throw ValidationError("dimension mismatch: rank is " + std::to_string(rs.rank()));
  if (!lambda.is_dominant()) throw HypothesisError("weight " + lambda.to_string() + " is not dominant");
  BigInt num = 1, den = 1;
  for (const auto& cv : rs.positive_coroots()) {
    BigInt a = 0, b = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      a += (BigInt(lambda[i]) + 1) * cv[i];
      b += cv[i];
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw InternalError("Weyl dimension is not integral");
  return num / den;
}

}  // namespace pgit
