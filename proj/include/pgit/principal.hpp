#pragma once

#include <vector>

#include "pgit/root_system.hpp"

namespace pgit {

/// The principal element h0 (alpha(h0) = 2 on every simple root), recorded
/// through its pairing with fundamental weights: iota_i = omega_i(h0).
struct PrincipalElement {
  IntVector iota;
  /// m(g) = min of iota over the nodes of each simple component, in component order.
  IntVector min_values;

  /// lambda(h0)
  Int restrict(const Weight& lambda) const {
    if (lambda.size() != iota.size()) throw ValidationError("rank mismatch: rank is " + std::to_string(iota.size()));
    return dot(lambda.coords, iota);
  }

  Rational restrict(const RationalWeight& lambda) const {
    if (lambda.coords.size() != iota.size()) throw ValidationError("rank mismatch: rank is " + std::to_string(iota.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < iota.size(); ++i) s += lambda.coords[i] * iota[i];
    return s;
  }
};

/// iota = (2 2 ... 2) A^{-1}, exact. A non-integral entry means the Cartan
/// matrix convention is broken.
inline PrincipalElement principal_element(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  PrincipalElement pe;
  pe.iota.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Rational v = 0;
    for (std::size_t i = 0; i < n; ++i) v += 2 * rs.cartan_inv()(i, j);
    if (boost::multiprecision::denominator(v) != 1 || v <= 0)
      throw InternalError("omega_" + std::to_string(j + 1) + "(h0) is not a positive integer");
    pe.iota[j] = static_cast<Int>(boost::multiprecision::numerator(v));
  }
  const auto& off = rs.component_offsets();
  for (std::size_t c = 0; c + 1 < off.size(); ++c)
    pe.min_values.push_back(*std::min_element(pe.iota.begin() + static_cast<std::ptrdiff_t>(off[c]),
                                              pe.iota.begin() + static_cast<std::ptrdiff_t>(off[c + 1])));
  return pe;
}

/// m(g) per simple component of `type`.
inline IntVector min_fundamental_value(const CartanType& type) {
  return principal_element(build_root_system(type)).min_values;
}

}  // namespace pgit
