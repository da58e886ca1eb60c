#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "pgit/multiplicity.hpp"
#include "pgit/principal.hpp"
#include "pgit/root_system.hpp"

namespace pgit {

inline constexpr std::uint64_t kDefaultOracleGuard = 100'000;

namespace detail {

/// The dominant Weyl-conjugate of mu.
inline IntVector dominant_representative(const RootSystem& rs, IntVector mu) {
  Weight w(std::move(mu));
  for (;;) {
    std::size_t i = 0;
    while (i < w.size() && w[i] >= 0) ++i;
    if (i == w.size()) return w.coords;
    w = reflect_simple(rs, w, i);
  }
}

/// Height of lambda - mu in simple-root coordinates.
inline Rational root_height(const RootSystem& rs, const IntVector& diff) {
  Rational h = 0;
  for (std::size_t k = 0; k < rs.rank(); ++k)
    for (std::size_t j = 0; j < rs.rank(); ++j) h += rs.cartan_inv()(k, j) * diff[j];
  return h;
}

}  // namespace detail

/// Multiplicities of the dominant weights of V_lambda by Freudenthal's recursion.
inline std::map<IntVector, Int> freudenthal_dominant(const RootSystem& rs, const Weight& lambda,
                                                      std::uint64_t guard = kDefaultOracleGuard) {
  if (lambda.size() != rs.rank()) throw ValidationError("rank mismatch: rank is " + std::to_string(rs.rank()));
  if (!lambda.is_dominant()) throw HypothesisError("weight " + lambda.to_string() + " is not dominant");
  BigInt dim = weyl_dimension(rs, lambda);
  if (dim > guard)
    throw HypothesisError("dim V_lambda = " + dim.str() + " exceeds the oracle guard " + std::to_string(guard));

  std::set<IntVector> dominant{lambda.coords};
  std::deque<IntVector> queue{lambda.coords};
  while (!queue.empty()) {
    IntVector mu = queue.front();
    queue.pop_front();
    for (const auto& a : rs.positive_root_weights()) {
      IntVector nu(mu.size());
      bool ok = true;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        nu[i] = mu[i] - a[i];
        ok = ok && nu[i] >= 0;
      }
      if (ok && dominant.insert(nu).second) queue.push_back(nu);
    }
  }
  std::vector<std::pair<Rational, IntVector>> order;
  for (const auto& mu : dominant) {
    IntVector diff(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) diff[i] = lambda[i] - mu[i];
    order.emplace_back(detail::root_height(rs, diff), mu);
  }
  std::sort(order.begin(), order.end());

  auto plus_rho = [&](const IntVector& v) {
    IntVector r(v);
    for (auto& x : r) x += 1;
    return r;
  };
  const IntVector lr = plus_rho(lambda.coords);
  const Rational norm_lr = rs.inner_product(lr, lr);

  std::map<IntVector, Int> mult;
  mult[lambda.coords] = 1;
  for (std::size_t t = 1; t < order.size(); ++t) {
    const IntVector& mu = order[t].second;
    Rational sum = 0;
    for (const auto& a : rs.positive_root_weights()) {
      IntVector nu(mu);
      for (;;) {
        for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += a[i];
        auto it = mult.find(detail::dominant_representative(rs, nu));
        if (it == mult.end()) break;
        sum += Rational(it->second) * rs.inner_product(nu, a);
      }
    }
    const IntVector mr = plus_rho(mu);
    Rational denom = norm_lr - rs.inner_product(mr, mr);
    if (denom <= 0) throw InternalError("Freudenthal denominator is not positive");
    Rational m = 2 * sum / denom;
    if (boost::multiprecision::denominator(m) != 1 || m < 0) throw InternalError("Freudenthal multiplicity is not a natural number");
    mult[mu] = static_cast<Int>(boost::multiprecision::numerator(m));
  }
  return mult;
}

/// Weyl orbit of a dominant weight.
inline std::vector<IntVector> weyl_orbit(const RootSystem& rs, const IntVector& mu) {
  std::set<IntVector> seen{mu};
  std::vector<IntVector> out{mu};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (out[k][i] == 0) continue;
      IntVector nu = reflect_simple(rs, Weight(out[k]), i).coords;
      if (seen.insert(nu).second) out.push_back(nu);
    }
  return out;
}

/// All weights of V_lambda with multiplicity.
inline std::map<IntVector, Int> freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda,
                                                            std::uint64_t guard = kDefaultOracleGuard) {
  std::map<IntVector, Int> all;
  for (const auto& [mu, m] : freudenthal_dominant(rs, lambda, guard))
    for (const auto& nu : weyl_orbit(rs, mu)) all.emplace(nu, m);
  return all;
}

/// The restriction of the Freudenthal character to the principal torus.
inline CharacterPoly restricted_character_oracle(const RootSystem& rs, const PrincipalElement& pe,
                                                 const Weight& lambda, std::uint64_t guard = kDefaultOracleGuard) {
  std::map<Int, BigInt> acc;
  for (const auto& [nu, m] : freudenthal_multiplicities(rs, lambda, guard)) acc[pe.restrict(Weight(nu))] += m;
  CharacterPoly p;
  const Int top = pe.restrict(lambda);
  p.min_exponent = -top;
  for (Int e = -top; e <= top; e += 2) {
    auto it = acc.find(e);
    p.coeffs.push_back(it == acc.end() ? BigInt(0) : it->second);
  }
  BigInt covered = 0;
  for (const auto& c : p.coeffs) covered += c;
  BigInt total = 0;
  for (const auto& [e, c] : acc) total += c;
  if (covered != total) throw InternalError("restricted weight outside [-lambda(h0), lambda(h0)] or of wrong parity");
  return p;
}

}  // namespace pgit
