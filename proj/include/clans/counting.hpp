#pragma once

#include "clan.hpp"
#include "symfun.hpp"
#include "weak_order.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace clans {

/// #R(γ) = (pq)! / ∏_{i ∈ φ+, j ∈ φ-} |i - j| for matchless γ.
inline BigInt product_formula_count(const Clan& g) {
  if (!g.is_matchless()) throw std::invalid_argument("product formula needs a matchless clan");
  Profile pr = profile(g);
  Rational r = Rational(factorial(g.p() * g.q()));
  for (int i : pr.phi_plus)
    for (int j : pr.phi_minus) r /= std::abs(i - j);
  return to_integer(r, "product formula");
}

/// The multinomial · f^{λ+} · f^{λ-} form of the same count.
inline BigInt hook_form_count(const Clan& g) {
  if (!g.is_matchless()) throw std::invalid_argument("hook form needs a matchless clan");
  Profile pr = profile(g);
  Partition lp(pr.lambda_plus), lm(pr.lambda_minus);
  return multinomial({lp.size(), lm.size()}) * count_SYT(lp) * count_SYT(lm);
}

// ---------------------------------------------------------------------------
// Involutions

inline int kappa(const Permutation& z) {
  int k = 0;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] > static_cast<int>(i) + 1) ++k;
  return k;
}

inline bool in_Ipq(const Permutation& z, int p, int q) {
  return is_involution(z) && static_cast<int>(z.size()) == p + q && kappa(z) <= std::min(p, q);
}

inline Permutation w_pq(int p, int q) { return underlying_involution(minimal_clan(p, q)); }

/// z ∗ s_i: z s_i when s_i commutes with z, else s_i z s_i.
inline Permutation involution_star(const Permutation& z, int i) {
  const int n = static_cast<int>(z.size());
  if (i < 1 || i >= n) throw std::out_of_range("involution_star index out of range");
  Permutation s = identity_perm(n);
  std::swap(s[i - 1], s[i]);
  Permutation zs = compose(z, s), sz = compose(s, z);
  if (zs == sz) return zs;
  return compose(sz, s);
}

/// Involution length (ℓ(z) + κ(z)) / 2: the rank in involution weak order.
inline int involution_length(const Permutation& z) { return (length(z) + kappa(z)) / 2; }

/// R̂(z), sorted lexicographically.
class InvolutionWordEnumerator {
 public:
  const std::vector<Word>& operator()(const Permutation& z) {
    auto it = memo_.find(z);
    if (it != memo_.end()) return it->second;
    std::vector<Word> words;
    bool any = false;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
      if (z[i] < z[i + 1]) continue;
      any = true;
      for (const auto& w : (*this)(involution_star(z, static_cast<int>(i) + 1))) {
        Word x = w;
        x.push_back(static_cast<int>(i) + 1);
        words.push_back(std::move(x));
      }
    }
    if (!any) words.push_back({});
    std::sort(words.begin(), words.end());
    return memo_.emplace(z, std::move(words)).first->second;
  }

 private:
  std::map<Permutation, std::vector<Word>> memo_;
};

inline std::vector<Word> involution_words(const Permutation& z) {
  if (!is_involution(z)) throw std::invalid_argument("not an involution");
  InvolutionWordEnumerator e;
  return e(z);
}

/// 2^{pq} (pq choose λ) ∏_{i=1}^{q} (p+q-2i choose p-i, q-i)^{-1}, λ the staircase, p >= q.
inline BigInt maximal_chain_formula(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("p, q must be non-negative");
  if (p < q) std::swap(p, q);
  StrictPartition lam = staircase(p, q);
  Rational r = Rational(BigInt(1) << (p * q)) * Rational(multinomial(lam.parts));
  for (int i = 1; i <= q; ++i) r /= Rational(multinomial({p - i, q - i}));
  return to_integer(r, "maximal chain formula");
}

/// 2^{pq} g^λ for the staircase λ.
inline BigInt maximal_chain_hook_form(int p, int q) {
  if (p < q) std::swap(p, q);
  return (BigInt(1) << (p * q)) * count_shifted_SYT(staircase(p, q));
}

struct ChainCorrespondenceReport {
  bool ok = true;
  long long chains_checked = 0;     // (γ, involution chain) pairs
  BigInt clan_maximal_chains = 0;
  BigInt involution_words_top = 0;  // #R̂(w_{p,q})
  std::string failure;
};

/// For every saturated chain 1 = z^0 < ... < z^r = z in I_{p,q} (a reduced
/// involution word of z) and every γ with ι(γ) = z, exactly 2^κ(z) clan chains
/// start at γ and map onto it; also the total count of maximal clan chains.
inline ChainCorrespondenceReport chain_correspondence_check(int p, int q, bool force = false) {
  check_cap(p, q, force, 8);
  ChainCorrespondenceReport rep;
  InvolutionWordEnumerator inv_words;
  std::map<Permutation, std::vector<Clan>> fibers;
  for (const auto& g : enumerate_clans(p, q)) fibers[underlying_involution(g)].push_back(g);
  for (const auto& [z, clans_over_z] : fibers) {
    const BigInt expected = BigInt(1) << kappa(z);
    for (const auto& word : inv_words(z)) {
      for (const auto& g : clans_over_z) {
        // climb from γ following the chain from its top label down
        std::vector<Clan> frontier{g};
        Permutation cur = z;
        for (auto it = word.rbegin(); it != word.rend() && rep.ok; ++it) {
          Permutation below = involution_star(cur, *it);
          std::vector<Clan> next;
          for (const auto& c : frontier)
            for (const auto& up : up_covers(c))
              if (up.label == *it) {
                if (underlying_involution(up.clan) != below) {
                  rep.ok = false;
                  rep.failure = "cover image mismatch above " + c.str();
                }
                next.push_back(up.clan);
              }
          frontier = std::move(next);
          cur = below;
        }
        ++rep.chains_checked;
        if (BigInt(frontier.size()) != expected) {
          rep.ok = false;
          rep.failure = "clan " + g.str() + " over chain " + format_word(word) + ": " +
                        std::to_string(frontier.size()) + " lifts, expected " + expected.str();
        }
      }
    }
  }
  rep.clan_maximal_chains = count_maximal_chains(p, q, force);
  rep.involution_words_top = BigInt(inv_words(w_pq(p, q)).size());
  if (rep.clan_maximal_chains != (BigInt(1) << std::min(p, q)) * rep.involution_words_top) {
    rep.ok = false;
    rep.failure = "maximal chain total differs from 2^min(p,q) * #R̂(w_pq)";
  }
  return rep;
}

/// All involutions of [n] with at most k 2-cycles.
inline std::vector<Permutation> involutions_upto(int n, int k) {
  std::vector<Permutation> out;
  Permutation z(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int used) {
    while (pos < n && z[pos] != 0) ++pos;
    if (pos == n) {
      out.push_back(z);
      return;
    }
    z[pos] = pos + 1;
    rec(pos + 1, used);
    z[pos] = 0;
    if (used < k)
      for (int j = pos + 1; j < n; ++j) {
        if (z[j] != 0) continue;
        z[pos] = j + 1;
        z[j] = pos + 1;
        rec(pos + 1, used + 1);
        z[pos] = z[j] = 0;
      }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}


struct IotaReport {
  bool order_reversing = true;
  bool image_is_Ipq = true;
  bool fiber_sizes_ok = true;
  std::size_t clans = 0, involutions = 0;
};

/// ι on Clan_{p,q}: every cover maps to a cover of involution weak order in the
/// opposite direction, the image is I_{p,q}, and the fiber over z has
/// (n-2κ choose p-κ) elements.
inline IotaReport iota_check(int p, int q, bool force = false) {
  IotaReport rep;
  Poset P = build_poset(p, q, force);
  rep.clans = P.elements.size();
  for (auto& [lo, hi, lab] : P.covers) {
    Permutation zl = underlying_involution(P.elements[lo]), zh = underlying_involution(P.elements[hi]);
    if (involution_star(zh, lab) != zl || involution_length(zl) != involution_length(zh) + 1)
      rep.order_reversing = false;
  }
  std::map<Permutation, int> fiber;
  for (const auto& g : P.elements) ++fiber[underlying_involution(g)];
  const int n = p + q;
  auto expected = involutions_upto(n, std::min(p, q));
  rep.involutions = expected.size();
  if (expected.size() != fiber.size()) rep.image_is_Ipq = false;
  for (const auto& z : expected) {
    auto it = fiber.find(z);
    if (it == fiber.end()) {
      rep.image_is_Ipq = false;
      continue;
    }
    int k = kappa(z);
    if (BigInt(it->second) != binomial(n - 2 * k, p - k)) rep.fiber_sizes_ok = false;
  }
  return rep;
}

/// Elements of I_{p,q} with no step up inside I_{p,q}; should be exactly {w_{p,q}}.
inline std::vector<Permutation> maximal_in_Ipq(int p, int q) {
  const int n = p + q;
  std::vector<Permutation> out;
  for (const auto& z : involutions_upto(n, std::min(p, q))) {
    bool top = true;
    for (int i = 1; i < n && top; ++i) {
      if (z[i - 1] > z[i]) continue;
      if (in_Ipq(involution_star(z, i), p, q)) top = false;
    }
    if (top) out.push_back(z);
  }
  return out;
}

struct ChainTableRow {
  int p, q;
  BigInt enumerated, formula;
  bool match() const { return enumerated == formula; }
};

inline std::string format_chain_table(const std::vector<ChainTableRow>& rows) {
  std::vector<std::array<std::string, 5>> cells;
  cells.push_back({"p", "q", "enumerated", "formula", "match"});
  for (const auto& r : rows)
    cells.push_back({std::to_string(r.p), std::to_string(r.q), r.enumerated.str(), r.formula.str(),
                     r.match() ? "yes" : "NO"});
  std::array<std::size_t, 5> w{};
  for (const auto& c : cells)
    for (std::size_t k = 0; k < 5; ++k) w[k] = std::max(w[k], c[k].size());
  std::string out;
  for (const auto& c : cells) {
    std::string line;
    for (std::size_t k = 0; k < 5; ++k) {
      if (k > 0) line += "  ";
      line += std::string(w[k] - c[k].size(), ' ') + c[k];
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace clans
