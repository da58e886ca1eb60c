#pragma once

#include <map>
#include <string>
#include <vector>

#include "pgit/setting.hpp"

namespace pgit {

/// The walls H_w = { lambda : lambda(w h0) = 0 }, one primitive integer
/// covector per pair {w, w0 w}. The covector of w is lambda -> iota(w^{-1} lambda).
struct HyperplaneFamily {
  /// Sign-normalized (first nonzero entry positive), in order of first
  /// appearance over the canonical element order; entry 0 comes from the identity.
  std::vector<IntVector> functionals;
  struct Orientation {
    std::size_t functional;
    int sign;  // L_w = sign * functionals[functional] up to a positive scalar
  };
  /// Indexed by element id: the wall H_w.
  std::vector<Orientation> index;
  /// Indexed by element id: lambda -> iota(w lambda), i.e. the wall of w^{-1}.
  std::vector<Orientation> value_index;

  /// Sign of iota(w lambda) given the sign vector of lambda.
  int value_sign(ElementId w, const std::vector<int>& signs) const {
    return value_index[w].sign * signs[value_index[w].functional];
  }

  std::vector<int> signs(const Weight& lambda) const {
    std::vector<int> s;
    s.reserve(functionals.size());
    for (const auto& f : functionals) s.push_back(sign_of(dot(f, lambda.coords)));
    return s;
  }

  std::vector<int> signs(const RationalWeight& lambda) const {
    std::vector<int> s;
    s.reserve(functionals.size());
    for (const auto& f : functionals) {
      Rational v = 0;
      for (std::size_t i = 0; i < f.size(); ++i) v += lambda.coords[i] * f[i];
      s.push_back(sign_of(v));
    }
    return s;
  }
};

inline std::string signature_string(const std::vector<int>& signs) {
  std::string s;
  for (int x : signs) s += x > 0 ? '+' : x < 0 ? '-' : '0';
  return s;
}

inline HyperplaneFamily hyperplane_family(const FlagSetting& st) {
  const auto& W = st.weyl;
  const std::size_t n = st.rs.rank();
  HyperplaneFamily fam;
  fam.index.resize(W.order());
  std::map<IntVector, std::size_t> seen;
  for (const auto& w : W.elements()) {
    const IntMatrix& inv = W[W.inverse(w.id)].action;
    IntVector c(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) c[j] = checked_add(c[j], checked_mul(st.pe.iota[i], inv(i, j)));
    c = primitive(std::move(c));
    int orient = 1;
    for (Int x : c) {
      if (x != 0) {
        orient = x > 0 ? 1 : -1;
        break;
      }
    }
    if (orient < 0)
      for (auto& x : c) x = -x;
    auto [it, inserted] = seen.emplace(c, fam.functionals.size());
    if (inserted) fam.functionals.push_back(c);
    fam.index[w.id] = {it->second, orient};
  }
  fam.value_index.resize(W.order());
  for (const auto& w : W.elements()) fam.value_index[w.id] = fam.index[W.inverse(w.id)];
  if (fam.functionals.size() * 2 != W.order()) throw InternalError("hyperplane family does not have |W|/2 members");
  return fam;
}

enum class ClassKind { Chamber, WallFace, LowDimUndetermined };

inline const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Chamber: return "chamber";
    case ClassKind::WallFace: return "wall-face";
    case ClassKind::LowDimUndetermined: return "low-dim-undetermined";
  }
  return "";
}

/// A GIT-equivalence class of ample line bundles, identified by its sign
/// vector over HyperplaneFamily::functionals.
struct GITClass {
  std::vector<int> signs;
  std::string signature;
  ClassKind kind = ClassKind::LowDimUndetermined;
  RationalWeight representative;
  /// W^0 of the representative, element ids in canonical order.
  std::vector<ElementId> zero_set;
};

inline ClassKind classify_kind(const FlagSetting& st, const std::vector<ElementId>& zero_set) {
  if (st.dim_x() < 3) return ClassKind::LowDimUndetermined;
  return zero_set.empty() ? ClassKind::Chamber : ClassKind::WallFace;
}

/// W^0: elements w with iota(w lambda) = 0, read off the sign vector of lambda.
inline std::vector<ElementId> zero_set_from_signs(const HyperplaneFamily& fam, const std::vector<int>& signs) {
  std::vector<ElementId> z;
  for (ElementId w = 0; w < fam.value_index.size(); ++w)
    if (fam.value_sign(w, signs) == 0) z.push_back(w);
  return z;
}

}  // namespace pgit
