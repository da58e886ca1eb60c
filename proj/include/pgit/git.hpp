#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pgit/hyperplanes.hpp"
#include "pgit/setting.hpp"

namespace pgit {

/// W = W+ u W0 u W-, split by the sign of iota(w lambda).
struct WeylPartition {
  Weight lambda;
  std::vector<ElementId> plus;
  std::vector<ElementId> zero;
  std::vector<ElementId> minus;
  /// iota(w lambda), indexed by element id.
  std::vector<Int> values;
};

namespace detail {

inline void require_rank(const FlagSetting& st, const Weight& lambda) {
  if (lambda.size() != st.rs.rank())
    throw ValidationError("weight has " + std::to_string(lambda.size()) + " coordinates, rank of " +
                          st.rs.type().to_string() + " is " + std::to_string(st.rs.rank()));
}

inline void require_strictly_dominant(const Weight& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] <= 0)
      throw HypothesisError("weight " + lambda.to_string() + " is not strictly dominant: coordinate " +
                            std::to_string(i + 1) + " is " + std::to_string(lambda[i]));
}

inline void require_dominant(const Weight& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] < 0)
      throw HypothesisError("weight " + lambda.to_string() + " is not dominant: coordinate " + std::to_string(i + 1) +
                            " is " + std::to_string(lambda[i]));
}

inline bool is_a1xa1(const CartanType& t) {
  const auto& c = t.components();
  return c.size() == 2 && c[0] == SimpleComponent{Family::A, 1} && c[1] == SimpleComponent{Family::A, 1};
}

}  // namespace detail

inline WeylPartition partition_weyl(const FlagSetting& st, const Weight& lambda) {
  detail::require_rank(st, lambda);
  detail::require_strictly_dominant(lambda);
  WeylPartition p;
  p.lambda = lambda;
  p.values.reserve(st.weyl.order());
  for (const auto& w : st.weyl.elements()) {
    Int v = st.pe.restrict(Weight(w.action * lambda.coords));
    p.values.push_back(v);
    (v > 0 ? p.plus : v < 0 ? p.minus : p.zero).push_back(w.id);
  }
  return p;
}

struct Stratum {
  ElementId element;
  std::string word;
  int length;
  int dim;  // l(w) + 1
};

struct StrataReport {
  Weight lambda;
  int dim_x = 0;
  /// One Kirwan stratum S B x_w per w in W+, in canonical element order.
  std::vector<Stratum> strata;
  int dim_unstable = 0;
  /// Empty only when W- is empty, which cannot happen for lambda != 0.
  std::optional<int> codim_unstable;
  bool movable = false;
  bool semistable_nonempty = false;
  /// Set for type A1xA1, where semistability needs s_a lambda(h0) = s_b lambda(h0) = 0.
  bool a1xa1_special_case = false;
};

inline StrataReport strata_report(const FlagSetting& st, const WeylPartition& part) {
  StrataReport r;
  r.lambda = part.lambda;
  r.dim_x = st.dim_x();
  int max_plus = -1;
  for (ElementId id : part.plus) {
    const auto& w = st.weyl[id];
    r.strata.push_back({id, format_word(w.word), w.length, w.length + 1});
    max_plus = std::max(max_plus, w.length);
  }
  r.dim_unstable = 1 + max_plus;
  if (!part.minus.empty()) {
    int min_minus = st.dim_x() + 1;
    for (ElementId id : part.minus) min_minus = std::min(min_minus, st.weyl[id].length);
    r.codim_unstable = min_minus - 1;
  }
  r.movable = r.codim_unstable && *r.codim_unstable >= 2;
  // X_ss is empty iff some simple reflection lies in W-.
  r.semistable_nonempty = r.codim_unstable && *r.codim_unstable >= 1;
  r.a1xa1_special_case = detail::is_a1xa1(st.rs.type());
  return r;
}

/// Eigencone membership: lambda(s_a h0) >= 0 for every simple root a
/// orthogonal to all other simple roots (the A1 factors).
inline bool semistable_nonempty(const RootSystem& rs, const PrincipalElement& pe, const Weight& lambda) {
  if (lambda.size() != rs.rank()) throw ValidationError("rank mismatch: rank is " + std::to_string(rs.rank()));
  detail::require_dominant(lambda);
  const auto& off = rs.component_offsets();
  for (std::size_t c = 0; c + 1 < off.size(); ++c) {
    if (off[c + 1] - off[c] != 1) continue;
    const std::size_t a = off[c];
    if (pe.restrict(reflect_simple(rs, lambda, a)) < 0) return false;
  }
  return true;
}

inline bool semistable_nonempty(const FlagSetting& st, const Weight& lambda) {
  detail::require_rank(st, lambda);
  return semistable_nonempty(st.rs, st.pe, lambda);
}

struct MovabilityWitness {
  ElementId element;
  std::string word;
  /// 0-based simple roots alpha, beta of s_alpha s_beta; beta absent for a simple reflection.
  int alpha;
  std::optional<int> beta;
  Int value;  // iota(w lambda) < 0
};

struct MovabilityResult {
  bool movable = false;
  std::optional<MovabilityWitness> witness;
  /// Movability predicted by the pair criterion; only meaningful when semistable points exist.
  bool criterion_movable = true;
  bool criterion_agrees = true;
};

/// Pairs (alpha, beta) of the explicit movability criterion: both orders
/// inside A2 and C2 factors, and alpha an A1 node with any other beta.
inline std::vector<std::pair<int, int>> movability_criterion_pairs(const RootSystem& rs) {
  std::vector<std::pair<int, int>> pairs;
  const auto& comps = rs.type().components();
  const auto& off = rs.component_offsets();
  const int n = static_cast<int>(rs.rank());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const int o = static_cast<int>(off[c]);
    if (comps[c] == SimpleComponent{Family::A, 2} || comps[c] == SimpleComponent{Family::C, 2}) {
      pairs.emplace_back(o, o + 1);
      pairs.emplace_back(o + 1, o);
    }
    if (comps[c] == SimpleComponent{Family::A, 1})
      for (int b = 0; b < n; ++b)
        if (b != o) pairs.emplace_back(o, b);
  }
  return pairs;
}

/// Movability via codim X_us >= 2. The witness is a shortest element of W^-.
/// The pair criterion is evaluated alongside; on A3 it misses s_2 s_3 and s_2 s_1,
/// which leave W^+ near omega_3 and omega_1.
inline MovabilityResult is_movable(const FlagSetting& st, const Weight& lambda) {
  WeylPartition part = partition_weyl(st, lambda);
  StrataReport rep = strata_report(st, part);
  MovabilityResult res;
  res.movable = rep.movable;

  for (auto [a, b] : movability_criterion_pairs(st.rs))
    if (part.values[st.weyl.from_word({a, b})] < 0) {
      res.criterion_movable = false;
      break;
    }
  res.criterion_agrees = !rep.semistable_nonempty || res.criterion_movable == res.movable;

  if (!res.movable) {
    const WeylElement* best = nullptr;
    for (ElementId id : part.minus)
      if (!best || st.weyl[id].length < best->length) best = &st.weyl[id];
    if (best && best->length >= 1 && best->length <= 2)
      res.witness = MovabilityWitness{best->id, format_word(best->word), best->word[0],
                                      best->length == 2 ? std::optional<int>(best->word[1]) : std::nullopt,
                                      part.values[best->id]};
  }
  return res;
}

/// Sign vector of a strictly dominant, S-ample lambda over the wall family.
inline GITClass git_signature(const FlagSetting& st, const HyperplaneFamily& fam, const Weight& lambda) {
  detail::require_rank(st, lambda);
  detail::require_strictly_dominant(lambda);
  if (!semistable_nonempty(st, lambda))
    throw HypothesisError("weight " + lambda.to_string() + " is not S-ample: the semistable locus is empty");
  GITClass c;
  c.signs = fam.signs(lambda);
  c.signature = signature_string(c.signs);
  for (Int x : lambda.coords) c.representative.coords.emplace_back(x);
  c.zero_set = zero_set_from_signs(fam, c.signs);
  c.kind = classify_kind(st, c.zero_set);
  return c;
}

struct OrbitCensus {
  int num_curves = 1;
  BigInt num_two_dim;  // |W|/2 - 1
  int dim_x = 0;
};

/// Counts of S-orbits of dimension 1 and 2 in G/B; needs dim G/B >= 3.
inline OrbitCensus orbit_census(const RootSystem& rs) {
  const int dim = static_cast<int>(rs.num_positive_roots());
  if (dim < 3)
    throw HypothesisError("orbit census needs dim X >= 3, but dim X = " + std::to_string(dim) + " for " +
                          rs.type().to_string());
  return OrbitCensus{1, rs.type().classical_weyl_order() / 2 - 1, dim};
}

inline OrbitCensus orbit_census(const FlagSetting& st) {
  OrbitCensus c = orbit_census(st.rs);
  if (c.num_two_dim != BigInt(st.weyl.order() / 2 - 1)) throw InternalError("census disagrees with |W|");
  return c;
}

}  // namespace pgit
