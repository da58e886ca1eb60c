#pragma once

#include "pgit/principal.hpp"
#include "pgit/root_system.hpp"
#include "pgit/weyl_group.hpp"

namespace pgit {

/// Root system, enumerated Weyl group and principal element of one Cartan type.
/// Immutable once built; every classification routine reads from it.
struct FlagSetting {
  RootSystem rs;
  WeylGroup weyl;
  PrincipalElement pe;

  int dim_x() const { return static_cast<int>(rs.num_positive_roots()); }
};

inline FlagSetting make_setting(const CartanType& type, std::uint64_t weyl_guard = kDefaultWeylGuard) {
  RootSystem rs = build_root_system(type);
  WeylGroup w = enumerate_weyl_group(rs, weyl_guard);
  PrincipalElement pe = principal_element(rs);
  return FlagSetting{std::move(rs), std::move(w), std::move(pe)};
}

}  // namespace pgit
