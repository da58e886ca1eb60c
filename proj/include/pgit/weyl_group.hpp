#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pgit/root_system.hpp"

namespace pgit {

using ElementId = std::size_t;

struct WeylElement {
  ElementId id = 0;
  /// Shortlex-minimal reduced word of 0-based node indices; w = s_{word[0]} ... s_{word[k-1]}.
  std::vector<int> word;
  int length = 0;
  /// Action on fundamental-weight coordinates.
  IntMatrix action;
  /// action * rho; identifies the element.
  IntVector rho_image;
};

/// "s1.s2.s1" (1-based node names), identity as "e".
inline std::string format_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += '.';
    s += 's' + std::to_string(word[k] + 1);
  }
  return s;
}

inline constexpr std::uint64_t kDefaultWeylGuard = 1'000'000;

/// Fully enumerated finite Weyl group. Elements are stored sorted by
/// (length, shortlex word), so element ids are canonical.
class WeylGroup {
 public:
  std::size_t rank() const { return rank_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& operator[](ElementId id) const { return elements_.at(id); }
  ElementId identity() const { return 0; }
  ElementId longest() const { return longest_; }

  /// w * s_i
  ElementId right_multiply(ElementId w, std::size_t i) const { return right_[w * rank_ + i]; }
  /// s_i * w
  ElementId left_multiply(std::size_t i, ElementId w) const { return left_[w * rank_ + i]; }

  ElementId multiply(ElementId u, ElementId v) const {
    ElementId r = u;
    for (int i : elements_[v].word) r = right_multiply(r, static_cast<std::size_t>(i));
    return r;
  }

  ElementId inverse(ElementId w) const {
    ElementId r = identity();
    const auto& word = elements_[w].word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = right_multiply(r, static_cast<std::size_t>(*it));
    return r;
  }

  std::optional<ElementId> find(const IntVector& rho_image) const {
    auto it = index_.find(rho_image);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Looks up a 0-based reduced or non-reduced word.
  ElementId from_word(const std::vector<int>& word) const {
    ElementId r = identity();
    for (int i : word) {
      if (i < 0 || static_cast<std::size_t>(i) >= rank_) throw ValidationError("node index out of range in word");
      r = right_multiply(r, static_cast<std::size_t>(i));
    }
    return r;
  }

  /// Parses "s1.s2" or "e".
  ElementId parse(const std::string& text) const {
    if (text == "e") return identity();
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != 's') throw ValidationError("cannot parse Weyl word '" + text + "' at position " + std::to_string(pos));
      std::size_t end = text.find('.', pos);
      if (end == std::string::npos) end = text.size();
      std::string digits = text.substr(pos + 1, end - pos - 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ValidationError("cannot parse Weyl word '" + text + "' at position " + std::to_string(pos + 1));
      word.push_back(std::stoi(digits) - 1);
      pos = end + 1;
    }
    return from_word(word);
  }

  Weight act(ElementId w, const Weight& lambda) const {
    if (lambda.size() != rank_) throw ValidationError("rank mismatch: group rank " + std::to_string(rank_));
    return Weight(elements_[w].action * lambda.coords);
  }

  /// Bruhat order by the lifting property: for a right descent s of w,
  /// u <= w iff min(u, us) <= ws.
  bool bruhat_leq(ElementId u, ElementId w) const {
    while (true) {
      if (u == identity()) return true;
      if (elements_[u].length > elements_[w].length) return false;
      if (w == identity()) return false;
      std::size_t s = first_right_descent(w);
      ElementId us = right_multiply(u, s);
      if (elements_[us].length < elements_[u].length) u = us;
      w = right_multiply(w, s);
    }
  }

  /// Elements covered by w: t*w over reflections t with a length drop of exactly 1.
  std::vector<ElementId> covers(ElementId w) const {
    std::vector<ElementId> out;
    const auto& mu = elements_[w].rho_image;
    const int target = elements_[w].length - 1;
    for (std::size_t k = 0; k < root_weights_.size(); ++k) {
      // t_beta(mu) = mu - <mu, beta^vee> beta
      Int c = dot(mu, coroots_[k]);
      IntVector image = mu;
      for (std::size_t i = 0; i < rank_; ++i) image[i] = checked_sub(image[i], checked_mul(c, root_weights_[k][i]));
      ElementId v = index_.at(image);
      if (elements_[v].length == target) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Phi_w = { beta > 0 : w beta < 0 }, as indices into RootSystem::positive_roots().
  std::vector<std::size_t> inversion_set(ElementId w) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < root_weights_.size(); ++k) {
      IntVector image = elements_[w].action * root_weights_[k];
      Rational h = 0;
      for (std::size_t i = 0; i < rank_; ++i) h += height_[i] * image[i];
      if (h < 0) out.push_back(k);
    }
    return out;
  }

  friend WeylGroup enumerate_weyl_group(const RootSystem& rs, std::uint64_t guard);

 private:
  WeylGroup() = default;

  std::size_t first_right_descent(ElementId w) const {
    for (std::size_t i = 0; i < rank_; ++i)
      if (elements_[right_multiply(w, i)].length < elements_[w].length) return i;
    throw InternalError("non-identity element without a right descent");
  }

  std::size_t rank_ = 0;
  std::vector<WeylElement> elements_;
  std::unordered_map<IntVector, ElementId, IntVectorHash> index_;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
  ElementId longest_ = 0;
  std::vector<IntVector> root_weights_;
  std::vector<IntVector> coroots_;
  std::vector<Rational> height_;  // (1,...,1) A^{-1}: height of a weight in the root lattice
};

/// Breadth-first closure from the identity under right multiplication by
/// simple reflections, deduplicated by the image of rho.
inline WeylGroup enumerate_weyl_group(const RootSystem& rs, std::uint64_t guard = kDefaultWeylGuard) {
  const BigInt order = rs.type().classical_weyl_order();
  if (order > guard)
    throw HypothesisError("Weyl group of " + rs.type().to_string() + " has order " + order.str() +
                          ", exceeding the enumeration guard " + std::to_string(guard));
  const std::size_t n = rs.rank();
  WeylGroup W;
  W.rank_ = n;
  W.root_weights_ = rs.positive_root_weights();
  W.coroots_ = rs.positive_coroots();
  W.height_.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) W.height_[j] += rs.cartan_inv()(i, j);

  std::vector<IntMatrix> simple(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) s(k, i) -= rs.cartan()(k, i);
    simple[i] = s;
  }

  std::vector<IntVector> simple_rho(n);
  for (std::size_t i = 0; i < n; ++i) simple_rho[i] = simple[i] * rs.rho().coords;

  const auto total = static_cast<std::size_t>(order);
  W.elements_.reserve(total);
  W.index_.reserve(total * 2);
  WeylElement e;
  e.id = 0;
  e.action = IntMatrix::identity(n);
  e.rho_image = rs.rho().coords;
  W.index_.emplace(e.rho_image, 0);
  W.elements_.push_back(std::move(e));

  // Processing each layer in order, then node indices in increasing order,
  // discovers every element first through its shortlex-minimal word.
  W.right_.assign(total * n, 0);
  for (std::size_t cur = 0; cur < W.elements_.size(); ++cur) {
    for (std::size_t i = 0; i < n; ++i) {
      const WeylElement& w = W.elements_[cur];
      IntVector key = w.action * simple_rho[i];
      auto it = W.index_.find(key);
      if (it != W.index_.end()) {
        W.right_[cur * n + i] = it->second;
        continue;
      }
      WeylElement v;
      v.id = W.elements_.size();
      v.word = w.word;
      v.word.push_back(static_cast<int>(i));
      v.length = w.length + 1;
      v.action = w.action * simple[i];
      v.rho_image = std::move(key);
      W.index_.emplace(v.rho_image, v.id);
      W.right_[cur * n + i] = v.id;
      W.elements_.push_back(std::move(v));
      if (W.elements_.size() > total) throw InternalError("Weyl enumeration exceeded the classical order");
    }
  }
  if (W.elements_.size() != total) throw InternalError("Weyl enumeration does not match the classical order");

  W.left_.assign(total * n, 0);
  for (std::size_t id = 0; id < total; ++id)
    for (std::size_t i = 0; i < n; ++i) {
      Weight img = reflect_simple(rs, Weight(W.elements_[id].rho_image), i);
      W.left_[id * n + i] = W.index_.at(img.coords);
    }

  W.longest_ = total - 1;
  if (static_cast<std::size_t>(W.elements_[W.longest_].length) != rs.num_positive_roots())
    throw InternalError("longest element has the wrong length");
  return W;
}

}  // namespace pgit
