#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <vector>

#include "pgit/numeric.hpp"
#include "pgit/root_system.hpp"

namespace pgit {

/// Exact feasibility of homogeneous systems { a.x > 0 (strict), e.x = 0 }
/// over Q^n, by rational Fourier-Motzkin elimination with Chernikov pruning.
/// Returns a witness point on success.
class ConeFeasibility {
 public:
  using Row = std::vector<BigInt>;

  static std::optional<RationalWeight> solve(const std::vector<IntVector>& strict, const std::vector<IntVector>& equal,
                                             std::size_t dim) {
    std::vector<Row> s, e;
    for (const auto& r : strict) s.push_back(to_big(r, dim));
    for (const auto& r : equal) e.push_back(to_big(r, dim));
    return solve_big(s, e, dim);
  }

  static std::optional<RationalWeight> solve_big(const std::vector<Row>& strict, const std::vector<Row>& equal,
                                                 std::size_t dim) {
    // x = B y with the columns of B spanning the kernel of the equalities.
    std::vector<Row> basis = kernel_basis(equal, dim);
    const std::size_t r = basis.size();
    std::vector<Row> reduced;
    for (const auto& a : strict) {
      Row c(r);
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < dim; ++i) c[k] += a[i] * basis[k][i];
      c = primitive(std::move(c));
      if (is_zero(c)) return std::nullopt;
      reduced.push_back(std::move(c));
    }
    auto y = solve_strict(reduced, r);
    if (!y) return std::nullopt;
    RationalWeight x;
    x.coords.assign(dim, Rational(0));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < dim; ++i) x.coords[i] += (*y)[k] * Rational(basis[k][i]);
    return x;
  }

 private:
  struct Constraint {
    Row coef;
    std::vector<std::uint64_t> history;
  };

  static Row to_big(const IntVector& v, std::size_t dim) {
    if (v.size() != dim) throw ValidationError("constraint has the wrong dimension");
    return Row(v.begin(), v.end());
  }

  static bool is_zero(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
  }

  static std::size_t popcount(const std::vector<std::uint64_t>& h) {
    std::size_t c = 0;
    for (auto w : h) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Integer basis of { x : e.x = 0 for all rows e }, via rational RREF.
  static std::vector<Row> kernel_basis(const std::vector<Row>& eq, std::size_t dim) {
    std::vector<std::vector<Rational>> m;
    for (const auto& r : eq) m.emplace_back(r.begin(), r.end());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < m.size(); ++col) {
      std::size_t p = row;
      while (p < m.size() && m[p][col] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[row]);
      Rational piv = m[row][col];
      for (auto& x : m[row]) x /= piv;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == row || m[i][col] == 0) continue;
        Rational f = m[i][col];
        for (std::size_t j = 0; j < dim; ++j) m[i][j] -= f * m[row][j];
      }
      pivots.push_back(col);
      ++row;
    }
    std::vector<Row> basis;
    for (std::size_t free = 0; free < dim; ++free) {
      if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
      std::vector<Rational> v(dim, Rational(0));
      v[free] = 1;
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
      BigInt l = 1;
      for (const auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
      Row b;
      for (const auto& x : v) b.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
      basis.push_back(primitive(std::move(b)));
    }
    return basis;
  }

  /// Strict homogeneous system in r variables. Variables are eliminated from
  /// the last one down; stage k keeps the constraints on variables 0..r-1-k.
  static std::optional<std::vector<Rational>> solve_strict(const std::vector<Row>& rows, std::size_t r) {
    const std::size_t m = rows.size();
    const std::size_t words = (m + 63) / 64;
    std::vector<std::vector<Constraint>> stages;
    {
      std::vector<Constraint> first;
      std::map<Row, std::size_t> dedup;
      for (std::size_t k = 0; k < m; ++k) {
        if (dedup.count(rows[k])) continue;
        dedup.emplace(rows[k], first.size());
        Constraint c{rows[k], std::vector<std::uint64_t>(words, 0)};
        c.history[k / 64] |= std::uint64_t{1} << (k % 64);
        first.push_back(std::move(c));
      }
      stages.push_back(std::move(first));
    }
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t var = r - 1 - k;
      const auto& cur = stages.back();
      std::vector<const Constraint*> pos, neg;
      std::vector<Constraint> next;
      std::map<Row, std::size_t> dedup;
      auto add = [&](Constraint c) {
        c.coef.pop_back();
        auto it = dedup.find(c.coef);
        if (it == dedup.end()) {
          dedup.emplace(c.coef, next.size());
          next.push_back(std::move(c));
        } else if (popcount(c.history) < popcount(next[it->second].history)) {
          next[it->second].history = std::move(c.history);
        }
      };
      for (const auto& c : cur) {
        int sg = c.coef[var].sign();
        if (sg > 0) pos.push_back(&c);
        else if (sg < 0) neg.push_back(&c);
        else add(c);
      }
      // Chernikov: after k+1 eliminations a combination of more than k+2
      // original constraints is implied by the others.
      const std::size_t bound = k + 2;
      for (const auto* p : pos)
        for (const auto* q : neg) {
          std::vector<std::uint64_t> h(words);
          for (std::size_t w = 0; w < words; ++w) h[w] = p->history[w] | q->history[w];
          BigInt a = p->coef[var], b = -q->coef[var];
          Row coef(var + 1);
          for (std::size_t i = 0; i <= var; ++i) coef[i] = b * p->coef[i] + a * q->coef[i];
          coef = primitive(std::move(coef));
          if (is_zero(coef)) return std::nullopt;
          if (popcount(h) > bound) continue;
          add(Constraint{std::move(coef), std::move(h)});
        }
      stages.push_back(std::move(next));
    }
    if (!stages.back().empty()) return std::nullopt;

    // Back-substitution: stage r-j holds the projection onto variables 0..j-1.
    std::vector<Rational> y;
    for (std::size_t j = 1; j <= r; ++j) {
      const auto& cons = stages[r - j];
      const std::size_t var = j - 1;
      std::optional<Rational> lo, hi;
      for (const auto& c : cons) {
        Rational rest = 0;
        for (std::size_t i = 0; i < var; ++i) rest += Rational(c.coef[i]) * y[i];
        const BigInt& a = c.coef[var];
        if (a == 0) {
          if (rest <= 0) throw InternalError("Fourier-Motzkin back-substitution violated a settled constraint");
          continue;
        }
        Rational bound = -rest / Rational(a);
        if (a > 0) {
          if (!lo || bound > *lo) lo = bound;
        } else {
          if (!hi || bound < *hi) hi = bound;
        }
      }
      y.push_back(pick_between(lo, hi));
    }
    return y;
  }

  static BigInt floor_of(const Rational& q) {
    BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
    BigInt f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f;
  }

  /// A value strictly between lo and hi, preferring small integers.
  static Rational pick_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (!lo && !hi) return Rational(0);
    if (lo && !hi) return Rational(floor_of(*lo) + 1);
    if (!lo && hi) return Rational(-floor_of(-*hi) - 1);
    if (*lo >= *hi) throw InternalError("Fourier-Motzkin back-substitution found an empty interval");
    Rational cand(floor_of(*lo) + 1);
    if (cand < *hi) return cand;
    return (*lo + *hi) / 2;
  }
};

}  // namespace pgit
