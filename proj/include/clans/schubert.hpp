#pragma once

#include "clan.hpp"
#include "polynomial.hpp"
#include "weak_order.hpp"

#include <functional>
#include <map>
#include <vector>

namespace clans {

/// Compatible sequences b for a: weakly increasing, 1 <= b_i <= min(a_i, cap),
/// and b_i < b_{i+1} whenever a_i < a_{i+1}.
inline std::vector<Word> compatible_sequences(const Word& a, int cap = -1) {
  std::vector<Word> out;
  Word b(a.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == a.size()) {
      out.push_back(b);
      return;
    }
    int lo = 1;
    if (k > 0) lo = b[k - 1] + (a[k - 1] < a[k] ? 1 : 0);
    int hi = a[k];
    if (cap >= 0) hi = std::min(hi, cap);
    for (int v = lo; v <= hi; ++v) {
      b[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

/// Σ over words a and b ∈ comp(a) of x_{b_1} ... x_{b_l}.
inline Polynomial schubert_from_words(const std::vector<Word>& words) {
  Polynomial f;
  for (const auto& a : words)
    for (const auto& b : compatible_sequences(a)) f += Polynomial::from_indices(b);
  return f;
}

inline Polynomial schubert_perm(const Permutation& w) { return schubert_from_words(perm_reduced_words(w)); }

inline Polynomial schubert_clan(const Clan& g) { return schubert_from_words(reduced_words(g)); }

/// Flagged Schur polynomial: Σ x^T over semistandard tableaux of shape λ whose
/// row-i entries are at most φ_i. Zero parts of λ are allowed.
inline Polynomial flagged_schur(const std::vector<int>& lambda, const std::vector<int>& phi) {
  if (lambda.size() != phi.size()) throw std::invalid_argument("flag length must equal partition length");
  for (std::size_t k = 1; k < lambda.size(); ++k)
    if (lambda[k] > lambda[k - 1]) throw std::invalid_argument("partition must be weakly decreasing");
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::vector<std::vector<int>> T(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) T[r].assign(std::max(lambda[r], 0), 0);
  int maxv = 0;
  for (int x : phi) maxv = std::max(maxv, x);
  Exponent e(maxv, 0);
  std::map<Exponent, long long, GradedLexGreater> acc;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      Exponent t = e;
      trim(t);
      ++acc[t];
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, T[r][c - 1]);
    if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);
    for (int v = lo; v <= phi[r]; ++v) {
      T[r][c] = v;
      ++e[v - 1];
      rec(k + 1);
      --e[v - 1];
    }
  };
  rec(0);
  Polynomial f;
  for (const auto& [t, c] : acc) f.add_term(t, BigInt(c));
  return f;
}

/// Wyser–Yong polynomial along one chain: flagged Schur products on matchless
/// clans, then ∂_i down each cover.
class WyserYong {
 public:
  const Polynomial& operator()(const Clan& g) {
    auto it = memo_.find(g.entries());
    if (it != memo_.end()) return it->second;
    Polynomial f;
    if (g.is_matchless()) {
      f = matchless_value(g);
    } else {
      auto ups = up_covers(g);
      f = divided_difference((*this)(ups.front().clan), ups.front().label);
    }
    return memo_.emplace(g.entries(), std::move(f)).first->second;
  }

  static Polynomial matchless_value(const Clan& g) {
    Profile pr = profile(g);
    return flagged_schur(pr.lambda_plus, pr.phi_plus) * flagged_schur(pr.lambda_minus, pr.phi_minus);
  }

 private:
  std::map<std::vector<int>, Polynomial> memo_;
};

inline Polynomial wyser_yong(const Clan& g) {
  WyserYong wy;
  return wy(g);
}

/// Every value the Wyser–Yong recurrence produces over all chains up to a matchless clan.
class WyserYongAllChains {
 public:
  const std::vector<Polynomial>& operator()(const Clan& g) {
    auto it = memo_.find(g.entries());
    if (it != memo_.end()) return it->second;
    std::vector<Polynomial> vals;
    auto add = [&vals](Polynomial f) {
      for (const auto& v : vals)
        if (v == f) return;
      vals.push_back(std::move(f));
    };
    if (g.is_matchless()) {
      add(WyserYong::matchless_value(g));
    } else {
      for (const auto& c : up_covers(g))
        for (const auto& f : (*this)(c.clan)) add(divided_difference(f, c.label));
    }
    return memo_.emplace(g.entries(), std::move(vals)).first->second;
  }

 private:
  std::map<std::vector<int>, std::vector<Polynomial>> memo_;
};

/// F_γ in x_1..x_N: Σ over a ∈ R(γ) and b ∈ comp(a shifted by m) with b_i <= N.
inline Polynomial stanley_truncated(const Clan& g, int N) {
  if (N < 1) throw std::invalid_argument("need at least one variable");
  auto words = reduced_words(g);
  int len = words.empty() ? 0 : static_cast<int>(words.front().size());
  int m = std::max(len - 1, N - 1);
  Polynomial f;
  for (const auto& a : words) {
    Word shifted = a;
    for (int& x : shifted) x += m;
    for (const auto& b : compatible_sequences(shifted, N)) f += Polynomial::from_indices(b);
  }
  return f;
}

/// Same truncation via π_{w_M} 𝔖_γ with M = max(N, n), restricted to x_1..x_N.
inline Polynomial stanley_truncated_isobaric(const Clan& g, int N) {
  int M = std::max(N, g.size());
  return pi_longest(schubert_clan(g), M).restrict_vars(N);
}

}  // namespace clans
