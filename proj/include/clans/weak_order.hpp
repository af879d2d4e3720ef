#pragma once

#include "clan.hpp"

#include <map>
#include <queue>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

namespace clans {

struct Cover {
  int label;
  Clan clan;
};

/// Clans covered by γ: star(γ,i) defined and ι gets longer.
inline std::vector<Cover> down_covers(const Clan& g) {
  std::vector<Cover> out;
  const int len = length(underlying_involution(g));
  for (int i = 1; i < g.size(); ++i) {
    auto d = star(g, i);
    if (d && length(underlying_involution(*d)) > len) out.push_back({i, std::move(*d)});
  }
  return out;
}

/// Clans covering γ. A pair i,i+1 matched together opens up in two ways, "+ -" first.
inline std::vector<Cover> up_covers(const Clan& g) {
  std::vector<Cover> out;
  for (int i = 1; i < g.size(); ++i) {
    if (g.partner(i) <= g.partner(i + 1)) continue;
    if (g.at(i) == i + 1) {
      std::vector<int> e = g.entries();
      e[i - 1] = Clan::PLUS;
      e[i] = Clan::MINUS;
      out.push_back({i, Clan(e)});
      std::swap(e[i - 1], e[i]);
      out.push_back({i, Clan(e)});
    } else {
      out.push_back({i, conjugate(g, i)});
    }
  }
  return out;
}

inline Clan minimal_clan_of(const Clan& g) { return minimal_clan(g.p(), g.q()); }

/// a ∈ R(γ): walking down from γ along a_l, ..., a_1 uses down-covers and ends at γ_{p,q}.
inline bool is_reduced_word(const Clan& g, const Word& a) {
  Clan cur = g;
  const int n = g.size();
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    if (*it < 1 || *it >= n) return false;
    auto d = star(cur, *it);
    if (!d) return false;
    if (length(underlying_involution(*d)) <= length(underlying_involution(cur))) return false;
    cur = std::move(*d);
  }
  return cur == minimal_clan_of(g);
}

/// R(γ), sorted lexicographically.
class ReducedWordEnumerator {
 public:
  const std::vector<Word>& operator()(const Clan& g) {
    auto it = memo_.find(g.entries());
    if (it != memo_.end()) return it->second;
    std::vector<Word> words;
    auto downs = down_covers(g);
    if (downs.empty()) {
      words.push_back({});
    } else {
      for (const auto& c : downs) {
        for (const auto& w : (*this)(c.clan)) {
          Word x = w;
          x.push_back(c.label);
          words.push_back(std::move(x));
        }
      }
      std::sort(words.begin(), words.end());
    }
    return memo_.emplace(g.entries(), std::move(words)).first->second;
  }

 private:
  std::map<std::vector<int>, std::vector<Word>> memo_;
};

inline std::vector<Word> reduced_words(const Clan& g) {
  ReducedWordEnumerator e;
  return e(g);
}

/// #R(γ) by summing over down-covers.
class ReducedWordCounter {
 public:
  BigInt operator()(const Clan& g) {
    auto it = memo_.find(g.entries());
    if (it != memo_.end()) return it->second;
    auto downs = down_covers(g);
    BigInt total = downs.empty() ? BigInt(1) : BigInt(0);
    for (const auto& c : downs) total += (*this)(c.clan);
    memo_.emplace(g.entries(), total);
    return total;
  }

 private:
  std::map<std::vector<int>, BigInt> memo_;
};

inline BigInt count_reduced_words(const Clan& g) {
  ReducedWordCounter c;
  return c(g);
}

/// Number of saturated chains from γ_{p,q} to γ, by walking every chain.
inline BigInt count_chains_by_walk(const Clan& g) {
  auto downs = down_covers(g);
  if (downs.empty()) return 1;
  BigInt total = 0;
  for (const auto& c : downs) total += count_chains_by_walk(c.clan);
  return total;
}

constexpr int kPosetCap = 10;

inline void check_cap(int p, int q, bool force, int cap = kPosetCap) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("need p,q >= 0 and p+q >= 1");
  if (!force && p + q > cap)
    throw size_cap_error("p+q = " + std::to_string(p + q) + " exceeds the cap " +
                         std::to_string(cap) + " (use force to override)");
}

struct Poset {
  int p = 0, q = 0;
  std::vector<Clan> elements;                  // sorted by rank, then canonical order
  std::vector<int> rank;                       // distance from the minimal element
  std::vector<std::tuple<int, int, int>> covers;  // (lower, upper, label)

  int index_of(const Clan& g) const {
    for (std::size_t k = 0; k < elements.size(); ++k)
      if (elements[k] == g) return static_cast<int>(k);
    return -1;
  }
};

inline Poset build_poset(int p, int q, bool force = false) {
  check_cap(p, q, force);
  std::map<std::vector<int>, int> level;
  std::vector<Clan> found;
  Clan bottom = minimal_clan(p, q);
  level[bottom.entries()] = 0;
  found.push_back(bottom);
  for (std::size_t head = 0; head < found.size(); ++head) {
    Clan g = found[head];
    int r = level[g.entries()];
    for (auto& c : up_covers(g)) {
      if (level.emplace(c.clan.entries(), r + 1).second) found.push_back(c.clan);
    }
  }
  Poset P;
  P.p = p;
  P.q = q;
  std::vector<std::pair<int, Clan>> order;
  for (auto& g : found) order.emplace_back(level[g.entries()], g);
  std::sort(order.begin(), order.end());
  std::map<std::vector<int>, int> index;
  for (auto& [r, g] : order) {
    index[g.entries()] = static_cast<int>(P.elements.size());
    P.elements.push_back(g);
    P.rank.push_back(r);
  }
  for (std::size_t k = 0; k < P.elements.size(); ++k)
    for (auto& c : up_covers(P.elements[k]))
      P.covers.emplace_back(static_cast<int>(k), index.at(c.clan.entries()), c.label);
  std::sort(P.covers.begin(), P.covers.end());
  return P;
}

/// Maximal chains of Clan_{p,q} by a DP over the poset.
inline BigInt count_maximal_chains(const Poset& P) {
  std::vector<BigInt> ways(P.elements.size(), 0);
  if (!ways.empty()) ways[0] = 1;
  // covers are sorted by lower index, and lower elements have smaller rank
  for (auto& [lo, hi, lab] : P.covers) ways[hi] += ways[lo];
  BigInt total = 0;
  for (std::size_t k = 0; k < P.elements.size(); ++k)
    if (P.elements[k].is_matchless()) total += ways[k];
  return total;
}

inline BigInt count_maximal_chains(int p, int q, bool force = false) {
  check_cap(p, q, force);
  ReducedWordCounter counter;
  BigInt total = 0;
  for (const auto& g : matchless_clans(p, q)) total += counter(g);
  return total;
}

inline std::string poset_to_dot(const Poset& P) {
  std::ostringstream os;
  os << "digraph clan_weak_order_" << P.p << "_" << P.q << " {\n";
  os << "  rankdir=BT;\n";
  for (const auto& g : P.elements) os << "  \"" << g.str() << "\";\n";
  for (auto& [lo, hi, lab] : P.covers)
    os << "  \"" << P.elements[lo].str() << "\" -> \"" << P.elements[hi].str()
       << "\" [label=\"s" << lab << "\"];\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::json poset_to_json(const Poset& P) {
  nlohmann::json els = nlohmann::json::array(), cov = nlohmann::json::array();
  for (const auto& g : P.elements) els.push_back(g.str());
  for (auto& [lo, hi, lab] : P.covers) cov.push_back({lo, hi, lab});
  return {{"p", P.p}, {"q", P.q}, {"elements", els}, {"covers", cov}};
}

inline Poset poset_from_json(const nlohmann::json& j) {
  Poset P;
  P.p = j.value("p", 0);
  P.q = j.value("q", 0);
  for (const auto& s : j.at("elements")) P.elements.push_back(parse_clan(s.get<std::string>()));
  for (const auto& c : j.at("covers")) P.covers.emplace_back(c[0].get<int>(), c[1].get<int>(), c[2].get<int>());
  P.rank.assign(P.elements.size(), 0);
  for (auto& [lo, hi, lab] : P.covers) P.rank[hi] = P.rank[lo] + 1;
  return P;
}

}  // namespace clans
