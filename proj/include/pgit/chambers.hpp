#pragma once

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pgit/feasibility.hpp"
#include "pgit/git.hpp"
#include "pgit/hyperplanes.hpp"

namespace pgit {

inline constexpr std::size_t kDefaultChamberRankGuard = 4;

struct ClassEnumeration {
  /// Sorted by signature.
  std::vector<GITClass> classes;
  std::size_t num_chambers = 0;
  std::size_t num_wall_faces = 0;
  std::size_t num_low_dim = 0;
  /// False when the S-ample part of the open dominant cone is empty.
  bool base_feasible = true;
  std::vector<std::string> notes;
};

namespace detail {

/// Allowed signs per functional on the S-ample open dominant cone.
struct SignOptions {
  std::vector<std::vector<int>> allowed;
};

inline SignOptions sign_options(const FlagSetting& st, const HyperplaneFamily& fam) {
  SignOptions o;
  for (const auto& f : fam.functionals) {
    bool nonneg = std::all_of(f.begin(), f.end(), [](Int x) { return x >= 0; });
    bool nonpos = std::all_of(f.begin(), f.end(), [](Int x) { return x <= 0; });
    if (nonneg) o.allowed.push_back({1});
    else if (nonpos) o.allowed.push_back({-1});
    else o.allowed.push_back({1, 0, -1});
  }
  // Eigencone: iota(s_a lambda) >= 0 for every A1 node a.
  const auto& off = st.rs.component_offsets();
  for (std::size_t c = 0; c + 1 < off.size(); ++c) {
    if (off[c + 1] - off[c] != 1) continue;
    const auto& ori = fam.value_index[st.weyl.from_word({static_cast<int>(off[c])})];
    auto& a = o.allowed[ori.functional];
    a.erase(std::remove(a.begin(), a.end(), -ori.sign), a.end());
  }
  return o;
}

struct ConeSystem {
  std::vector<IntVector> strict;
  std::vector<IntVector> equal;
};

inline ConeSystem base_system(std::size_t n) {
  ConeSystem s;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    s.strict.push_back(std::move(e));
  }
  return s;
}

inline void push_sign(ConeSystem& s, const IntVector& f, int sign) {
  if (sign == 0) {
    s.equal.push_back(f);
    return;
  }
  IntVector g = f;
  if (sign < 0)
    for (auto& x : g) x = -x;
  s.strict.push_back(std::move(g));
}

inline int eval_sign(const IntVector& f, const RationalWeight& p) {
  Rational v = 0;
  for (std::size_t i = 0; i < f.size(); ++i) v += p.coords[i] * f[i];
  return sign_of(v);
}

inline RationalWeight integral_rep(const RationalWeight& p) {
  RationalWeight r;
  for (Int x : p.primitive_integer()) r.coords.emplace_back(x);
  return r;
}

}  // namespace detail

/// All GIT-classes of S-ample line bundles in the open dominant cone, as
/// feasible sign vectors over the wall family, with integral representatives.
inline ClassEnumeration enumerate_git_classes(const FlagSetting& st, const HyperplaneFamily& fam,
                                              std::size_t rank_guard = kDefaultChamberRankGuard) {
  const std::size_t n = st.rs.rank();
  if (n > rank_guard)
    throw HypothesisError("chamber enumeration is limited to rank " + std::to_string(rank_guard) + ", " +
                          st.rs.type().to_string() + " has rank " + std::to_string(n));
  ClassEnumeration out;
  const auto opts = detail::sign_options(st, fam);
  const std::size_t m = fam.functionals.size();

  // Apply forced signs before searching so the base point already respects them.
  detail::ConeSystem base = detail::base_system(n);
  for (std::size_t k = 0; k < m; ++k)
    if (opts.allowed[k].size() == 1) detail::push_sign(base, fam.functionals[k], opts.allowed[k][0]);
  const bool some_empty =
      std::any_of(opts.allowed.begin(), opts.allowed.end(), [](const auto& a) { return a.empty(); });
  auto p0 = some_empty ? std::nullopt : ConeFeasibility::solve(base.strict, base.equal, n);
  if (!p0) {
    out.base_feasible = false;
    out.notes.push_back("the S-ample part of the open dominant cone of " + st.rs.type().to_string() + " is empty");
    return out;
  }
  if (st.dim_x() < 3)
    out.notes.push_back("dim X = " + std::to_string(st.dim_x()) + " < 3: chamber/wall kind is not determined");

  struct Frame {
    std::size_t depth;
    detail::ConeSystem sys;
    RationalWeight point;
  };
  std::vector<Frame> stack;
  stack.push_back({0, base, *p0});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.depth == m) {
      GITClass c;
      c.signs = fam.signs(fr.point);
      c.signature = signature_string(c.signs);
      c.representative = detail::integral_rep(fr.point);
      c.zero_set = zero_set_from_signs(fam, c.signs);
      c.kind = classify_kind(st, c.zero_set);
      out.classes.push_back(std::move(c));
      continue;
    }
    const auto& f = fam.functionals[fr.depth];
    const auto& allowed = opts.allowed[fr.depth];
    if (allowed.size() == 1) {
      if (detail::eval_sign(f, fr.point) != allowed[0]) throw InternalError("forced sign violated at base point");
      ++fr.depth;
      stack.push_back(std::move(fr));
      continue;
    }
    const int here = detail::eval_sign(f, fr.point);
    for (int s : allowed) {
      detail::ConeSystem sys = fr.sys;
      detail::push_sign(sys, f, s);
      std::optional<RationalWeight> pt;
      if (s == here) pt = fr.point;
      else pt = ConeFeasibility::solve(sys.strict, sys.equal, n);
      if (pt) stack.push_back({fr.depth + 1, std::move(sys), std::move(*pt)});
    }
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const GITClass& a, const GITClass& b) { return a.signature < b.signature; });
  for (std::size_t i = 1; i < out.classes.size(); ++i)
    if (out.classes[i].signature == out.classes[i - 1].signature) throw InternalError("duplicate class signature");
  for (const auto& c : out.classes) {
    if (c.kind == ClassKind::Chamber) ++out.num_chambers;
    else if (c.kind == ClassKind::WallFace) ++out.num_wall_faces;
    else ++out.num_low_dim;
  }
  return out;
}

/// Finds a class by index ("3") or by signature ("+-0+").
inline const GITClass& find_class(const ClassEnumeration& e, const std::string& id) {
  if (!id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    std::size_t k = std::stoul(id);
    if (k >= e.classes.size())
      throw ValidationError("class index " + id + " out of range, there are " + std::to_string(e.classes.size()));
    return e.classes[k];
  }
  for (const auto& c : e.classes)
    if (c.signature == id) return c;
  throw ValidationError("no class with signature " + id);
}

struct ConeInequality {
  /// coefficients . lambda >= 0
  IntVector coefficients;
  /// Index into HyperplaneFamily::functionals, absent for a coordinate facet.
  std::optional<std::size_t> functional;
};

struct ConeReport {
  std::string signature;
  /// Facets of the chamber closure.
  std::vector<ConeInequality> nef;
  /// lambda_i >= 0.
  std::vector<ConeInequality> eff_mov;
  bool valid = false;
  std::string note;
};

/// Refuses types with a simple factor of fewer than 5 positive roots, where
/// Pic(X) and Pic of the quotient are not identified.
inline void require_cone_comparison(const CartanType& t) {
  for (const auto& c : t.components())
    if (c.classical_num_positive_roots() < 5)
      throw HypothesisError("cone comparison needs every simple factor to have at least 5 positive roots; " + c.name() +
                            " has " + std::to_string(c.classical_num_positive_roots()) +
                            " and the Picard groups of X and the quotient differ");
}

/// Nef cone of the quotient as the closure of a chamber, next to the
/// effective (= movable) cone, the closed dominant cone.
inline ConeReport quotient_cone_report(const FlagSetting& st, const HyperplaneFamily& fam, const GITClass& cls) {
  require_cone_comparison(st.rs.type());
  if (cls.kind != ClassKind::Chamber)
    throw HypothesisError("class " + cls.signature + " is a " + to_string(cls.kind) + ", not a chamber");
  const std::size_t n = st.rs.rank();
  ConeReport r;
  r.signature = cls.signature;
  r.valid = true;
  r.note = "every nef class of the quotient is semiample";

  auto chamber_system = [&](std::optional<std::size_t> skip_fun, std::optional<std::size_t> skip_coord) {
    detail::ConeSystem s;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      if (skip_coord == i) s.equal.push_back(e);
      else s.strict.push_back(e);
    }
    for (std::size_t k = 0; k < fam.functionals.size(); ++k) {
      if (skip_fun == k) s.equal.push_back(fam.functionals[k]);
      else detail::push_sign(s, fam.functionals[k], cls.signs[k]);
    }
    return s;
  };
  for (std::size_t k = 0; k < fam.functionals.size(); ++k) {
    auto s = chamber_system(k, std::nullopt);
    if (!ConeFeasibility::solve(s.strict, s.equal, n)) continue;
    IntVector g = fam.functionals[k];
    if (cls.signs[k] < 0)
      for (auto& x : g) x = -x;
    r.nef.push_back({g, k});
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    r.eff_mov.push_back({e, std::nullopt});
    auto s = chamber_system(std::nullopt, i);
    if (ConeFeasibility::solve(s.strict, s.equal, n)) r.nef.push_back({e, std::nullopt});
  }
  return r;
}

}  // namespace pgit
