#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "pgit/error.hpp"
#include "pgit/numeric.hpp"

namespace pgit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleComponent {
  Family family;
  int rank;

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  /// Number of positive roots, by the classical closed forms.
  int classical_num_positive_roots() const {
    const int l = rank;
    switch (family) {
      case Family::A: return l * (l + 1) / 2;
      case Family::B:
      case Family::C: return l * l;
      case Family::D: return l * (l - 1);
      case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
      case Family::F: return 24;
      case Family::G: return 6;
    }
    return 0;
  }

  BigInt classical_weyl_order() const {
    const int l = rank;
    BigInt fact = 1;
    for (int k = 2; k <= l; ++k) fact *= k;
    switch (family) {
      case Family::A: return fact * (l + 1);
      case Family::B:
      case Family::C: return (BigInt(1) << l) * fact;
      case Family::D: return (BigInt(1) << (l - 1)) * fact;
      case Family::E: return l == 6 ? BigInt(51840) : l == 7 ? BigInt(2903040) : BigInt(696729600);
      case Family::F: return 1152;
      case Family::G: return 12;
    }
    return 0;
  }

  bool operator==(const SimpleComponent&) const = default;
};

/// Ordered list of simple components; B2 is stored as C2.
class CartanType {
 public:
  CartanType() = default;

  explicit CartanType(std::vector<SimpleComponent> components) : components_(std::move(components)) {
    if (components_.empty()) throw ValidationError("empty Cartan type");
    for (auto& c : components_) {
      validate(c);
      if (c.family == Family::B && c.rank == 2) c.family = Family::C;
    }
  }

  /// Grammar: components joined by 'x', each `<letter><rank>`, e.g. "A3xG2".
  static CartanType parse(std::string_view text) {
    std::vector<SimpleComponent> comps;
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) {
      throw ValidationError("cannot parse Cartan type '" + std::string(text) + "' at position " +
                            std::to_string(pos) + ": " + msg);
    };
    if (text.empty()) fail("empty string");
    while (true) {
      if (pos >= text.size()) fail("expected a family letter A-G");
      char letter = text[pos];
      if (letter < 'A' || letter > 'G') fail(std::string("unknown family letter '") + letter + "'");
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected a rank after the family letter");
      if (pos - start > 3) fail("rank too large");
      int rank = std::stoi(std::string(text.substr(start, pos - start)));
      SimpleComponent c{static_cast<Family>(letter), rank};
      try {
        validate(c);
      } catch (const ValidationError& e) {
        pos = start - 1;
        fail(e.what());
      }
      comps.push_back(c);
      if (pos == text.size()) break;
      if (text[pos] != 'x') fail("expected 'x' between components");
      ++pos;
    }
    return CartanType(std::move(comps));
  }

  const std::vector<SimpleComponent>& components() const { return components_; }

  int rank() const {
    int r = 0;
    for (const auto& c : components_) r += c.rank;
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) s += 'x';
      s += components_[i].name();
    }
    return s;
  }

  BigInt classical_weyl_order() const {
    BigInt o = 1;
    for (const auto& c : components_) o *= c.classical_weyl_order();
    return o;
  }

  int classical_num_positive_roots() const {
    int n = 0;
    for (const auto& c : components_) n += c.classical_num_positive_roots();
    return n;
  }

  bool has_component(Family f, int rank) const {
    for (const auto& c : components_)
      if (c.family == f && c.rank == rank) return true;
    return false;
  }

  bool has_rank_one_factor() const { return has_component(Family::A, 1); }

  bool operator==(const CartanType&) const = default;

 private:
  static void validate(const SimpleComponent& c) {
    const int l = c.rank;
    bool ok = false;
    switch (c.family) {
      case Family::A: ok = l >= 1; break;
      case Family::B: ok = l >= 2; break;
      case Family::C: ok = l >= 2; break;
      case Family::D: ok = l >= 4; break;
      case Family::E: ok = l >= 6 && l <= 8; break;
      case Family::F: ok = l == 4; break;
      case Family::G: ok = l == 2; break;
    }
    if (!ok) throw ValidationError("invalid rank " + std::to_string(l) + " for family " + static_cast<char>(c.family));
  }

  std::vector<SimpleComponent> components_;
};

/// Comma-separated integers, e.g. "3,1" or "-1,2".
inline IntVector parse_weight(std::string_view text) {
  IntVector out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw ValidationError("cannot parse weight '" + std::string(text) + "' at position " + std::to_string(pos) +
                          ": " + msg);
  };
  if (text.empty()) fail("empty string");
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_space();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) fail("expected an integer");
    try {
      out.push_back(std::stoll(std::string(text.substr(start, pos - start))));
    } catch (const std::out_of_range&) {
      pos = start;
      fail("integer out of 64-bit range");
    }
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }
  return out;
}

}  // namespace pgit
