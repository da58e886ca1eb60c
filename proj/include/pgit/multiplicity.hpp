#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "pgit/principal.hpp"
#include "pgit/root_system.hpp"

namespace pgit {

/// Symmetric Laurent polynomial p(q) supported on exponents of one parity:
/// coeff(min_exponent + 2k) = coeffs[k].
struct CharacterPoly {
  Int min_exponent = 0;
  std::vector<BigInt> coeffs;

  Int max_exponent() const { return min_exponent + 2 * (static_cast<Int>(coeffs.size()) - 1); }

  BigInt coeff(Int e) const {
    if (coeffs.empty() || e < min_exponent || e > max_exponent()) return 0;
    Int d = e - min_exponent;
    if (d % 2 != 0) return 0;
    return coeffs[static_cast<std::size_t>(d / 2)];
  }

  /// p(1)
  BigInt total() const {
    BigInt s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
  }

  /// Nonzero terms as exponent -> coefficient.
  std::map<Int, BigInt> terms() const {
    std::map<Int, BigInt> t;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) t.emplace(min_exponent + 2 * static_cast<Int>(k), coeffs[k]);
    return t;
  }

  bool operator==(const CharacterPoly&) const = default;
};

namespace detail {

using Poly = std::vector<BigInt>;

/// p * (1 - x^n)
inline Poly times_one_minus(const Poly& p, std::size_t n) {
  Poly r(p.size() + n, 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k] += p[k];
    r[k + n] -= p[k];
  }
  return r;
}

/// p / (1 - x^n), exact.
inline Poly divide_one_minus(const Poly& p, std::size_t n) {
  if (p.size() < n + 1) throw InternalError("principal character division is not exact");
  Poly q(p.size() - n, 0);
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = p[k] + (k >= n ? q[k - n] : BigInt(0));
  for (std::size_t k = q.size(); k < p.size(); ++k)
    if (p[k] + (k >= n ? q[k - n] : BigInt(0)) != 0) throw InternalError("principal character division is not exact");
  return q;
}

}  // namespace detail

/// p_lambda(q) = prod over positive coroots of [<lambda+rho, a^v>]_q / [<rho, a^v>]_q,
/// the character of V_lambda restricted to the principal torus.
inline CharacterPoly principal_character(const RootSystem& rs, const PrincipalElement& pe, const Weight& lambda) {
  if (lambda.size() != rs.rank()) throw ValidationError("rank mismatch: rank is " + std::to_string(rs.rank()));
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] < 0)
      throw HypothesisError("weight " + lambda.to_string() + " is not dominant: coordinate " + std::to_string(i + 1) +
                            " is " + std::to_string(lambda[i]));
  // With x = q^2, [n]_q = q^{1-n} (1 - x^n)/(1 - x).
  std::map<Int, int> num, den;
  Weight shifted(lambda.coords);
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted.coords[i] = checked_add(shifted.coords[i], 1);
  for (const auto& cv : rs.positive_coroots()) {
    ++num[pair_coroot(rs, shifted, cv)];
    ++den[pair_coroot(rs, rs.rho(), cv)];
  }
  for (auto& [n, c] : den) {
    auto it = num.find(n);
    if (it == num.end()) continue;
    int common = std::min(c, it->second);
    c -= common;
    it->second -= common;
  }
  detail::Poly p{1};
  for (const auto& [n, c] : num)
    for (int k = 0; k < c; ++k) p = detail::times_one_minus(p, static_cast<std::size_t>(n));
  for (const auto& [n, c] : den)
    for (int k = 0; k < c; ++k) p = detail::divide_one_minus(p, static_cast<std::size_t>(n));
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  CharacterPoly out;
  out.min_exponent = -pe.restrict(lambda);
  out.coeffs = std::move(p);
  if (out.max_exponent() != -out.min_exponent) throw InternalError("principal character is not symmetric");
  return out;
}

/// Multiplicities N_k of the irreducible sl2 summands V_k, k >= 0.
struct Sl2Decomposition {
  /// Nonzero N_k only.
  std::map<Int, BigInt> multiplicities;

  BigInt operator[](Int k) const {
    auto it = multiplicities.find(k);
    return it == multiplicities.end() ? BigInt(0) : it->second;
  }

  /// sum N_k (k + 1)
  BigInt dimension() const {
    BigInt s = 0;
    for (const auto& [k, n] : multiplicities) s += n * (k + 1);
    return s;
  }
};

inline Sl2Decomposition sl2_decompose(const CharacterPoly& p) {
  Sl2Decomposition d;
  const Int top = p.max_exponent();
  for (Int k = top; k >= 0; k -= 2) {
    BigInt n = p.coeff(k) - p.coeff(k + 2);
    if (n < 0) throw InternalError("negative sl2 multiplicity at highest weight " + std::to_string(k));
    if (n != 0) d.multiplicities.emplace(k, n);
  }
  return d;
}

/// m_lambda = dim of the principal-sl2 invariants in V_lambda.
inline BigInt invariant_dimension(const RootSystem& rs, const PrincipalElement& pe, const Weight& lambda) {
  CharacterPoly p = principal_character(rs, pe, lambda);
  BigInt m = p.coeff(0) - p.coeff(2);
  if (m < 0) throw InternalError("negative invariant dimension");
  return m;
}

struct SaturationResult {
  /// Smallest k in [1, kmax] with m_{k lambda} > 0; absent if none was found up to kmax.
  std::optional<int> k;
  int kmax = 0;
  /// m_{j lambda} for j = 1..kmax, or up to the k found.
  std::vector<BigInt> values;
};

inline SaturationResult saturation_search(const RootSystem& rs, const PrincipalElement& pe, const Weight& lambda,
                                          int kmax) {
  if (kmax < 1) throw ValidationError("kmax must be at least 1, got " + std::to_string(kmax));
  SaturationResult r;
  r.kmax = kmax;
  for (int k = 1; k <= kmax; ++k) {
    BigInt m = invariant_dimension(rs, pe, lambda.scaled(k));
    r.values.push_back(m);
    if (m > 0) {
      r.k = k;
      break;
    }
  }
  return r;
}

/// m_{k lambda} for k = 1..kmax.
inline std::vector<BigInt> ray_multiplicities(const RootSystem& rs, const PrincipalElement& pe, const Weight& lambda,
                                              int kmax) {
  if (kmax < 1) throw ValidationError("kmax must be at least 1, got " + std::to_string(kmax));
  std::vector<BigInt> v;
  for (int k = 1; k <= kmax; ++k) v.push_back(invariant_dimension(rs, pe, lambda.scaled(k)));
  return v;
}

}  // namespace pgit
