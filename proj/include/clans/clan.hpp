#pragma once

#include "common.hpp"
#include "permutation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace clans {

/// A (p,q)-clan: an involution of [n] whose fixed points carry a sign.
///
/// entries[i] (0-based i) is a 1-based partner index, or one of PLUS / MINUS.
class Clan {
 public:
  static constexpr int PLUS = 0;
  static constexpr int MINUS = -1;

  Clan() = default;

  /// Validates and wraps raw entries.
  explicit Clan(std::vector<int> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::invalid_argument("clan must have at least one position");
    const int n = size();
    for (int i = 0; i < n; ++i) {
      int v = e_[i];
      if (v == PLUS || v == MINUS) continue;
      if (v < 1 || v > n) throw std::invalid_argument("partner index out of range");
      if (v == i + 1) throw std::invalid_argument("position cannot be its own partner");
      if (e_[v - 1] != i + 1) throw std::invalid_argument("partner relation is not an involution");
    }
  }

  int size() const { return static_cast<int>(e_.size()); }
  const std::vector<int>& entries() const { return e_; }

  /// 1-based accessors.
  int at(int i) const { return e_[i - 1]; }
  bool is_fixed(int i) const { return e_[i - 1] <= 0; }
  bool is_plus(int i) const { return e_[i - 1] == PLUS; }
  bool is_minus(int i) const { return e_[i - 1] == MINUS; }
  int partner(int i) const { return e_[i - 1] > 0 ? e_[i - 1] : i; }

  int plus_count() const { return static_cast<int>(std::count(e_.begin(), e_.end(), PLUS)); }
  int minus_count() const { return static_cast<int>(std::count(e_.begin(), e_.end(), MINUS)); }
  int arc_count() const { return (size() - plus_count() - minus_count()) / 2; }
  int p() const { return plus_count() + arc_count(); }
  int q() const { return minus_count() + arc_count(); }
  bool is_matchless() const { return arc_count() == 0; }

  std::vector<std::string> tokens() const {
    std::vector<std::string> t;
    t.reserve(e_.size());
    for (int v : e_) t.push_back(v == PLUS ? "+" : v == MINUS ? "-" : std::to_string(v));
    return t;
  }

  /// Canonical whitespace-token form, e.g. "3 - 1".
  std::string str() const {
    auto t = tokens();
    std::string s;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) s += ' ';
      s += t[k];
    }
    return s;
  }

  /// Compact form ("+--+", "3-1") when every token is one character; else str().
  std::string compact() const {
    if (size() > 9) return str();
    std::string s;
    for (const auto& t : tokens()) s += t;
    return s;
  }

  friend bool operator==(const Clan& a, const Clan& b) { return a.e_ == b.e_; }

  /// Canonical order: lexicographic on the token sequence.
  friend std::strong_ordering operator<=>(const Clan& a, const Clan& b) {
    auto ta = a.tokens(), tb = b.tokens();
    return std::lexicographical_compare_three_way(ta.begin(), ta.end(), tb.begin(), tb.end());
  }

 private:
  std::vector<int> e_;
};

inline std::string to_string(const Clan& c) { return c.str(); }

namespace detail {
inline std::string normalize_minus(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

inline int parse_token(const std::string& tok) {
  if (tok == "+") return Clan::PLUS;
  if (tok == "-") return Clan::MINUS;
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                  [](unsigned char c) { return std::isdigit(c); }))
    throw parse_error("bad clan token '" + tok + "'");
  if (tok.size() > 6) throw parse_error("partner index too large: " + tok);
  return std::stoi(tok);
}
}  // namespace detail

/// Accepts whitespace/comma separated tokens ("3 - 1"), a compact sign string
/// ("+--+"), or a compact string over signs and digits for n <= 9 ("3-1").
inline Clan parse_clan(const std::string& input) {
  std::string text = detail::normalize_minus(input);
  std::vector<std::string> toks;
  bool separated = text.find_first_of(" \t\n,") != std::string::npos;
  if (separated) {
    std::string cur;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        if (!cur.empty()) toks.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) toks.push_back(cur);
  } else {
    for (char c : text) toks.emplace_back(1, c);
    if (toks.size() > 9 && std::any_of(text.begin(), text.end(), [](unsigned char c) {
          return std::isdigit(c);
        }))
      throw parse_error("compact clan strings with partner digits require n <= 9");
  }
  if (toks.empty()) throw parse_error("empty clan");
  std::vector<int> e;
  e.reserve(toks.size());
  for (const auto& t : toks) e.push_back(detail::parse_token(t));
  try {
    return Clan(std::move(e));
  } catch (const std::invalid_argument& ex) {
    throw parse_error(std::string("invalid clan '") + input + "': " + ex.what());
  }
}

/// s_i γ s_i: swap nodes i and i+1 together with their arcs or signs.
inline Clan conjugate(const Clan& g, int i) {
  const int n = g.size();
  if (i < 1 || i >= n) throw std::out_of_range("star index out of range");
  std::vector<int> e = g.entries();
  auto relabel = [i](int v) { return v == i ? i + 1 : v == i + 1 ? i : v; };
  for (int& v : e)
    if (v > 0) v = relabel(v);
  std::swap(e[i - 1], e[i]);
  return Clan(std::move(e));
}

/// The ∗-action; nullopt where it is undefined.
inline std::optional<Clan> star(const Clan& g, int i) {
  const int n = g.size();
  if (i < 1 || i >= n) throw std::out_of_range("star index out of range");
  if (g.is_fixed(i) && g.is_fixed(i + 1)) {
    if (g.at(i) == g.at(i + 1)) return std::nullopt;
    std::vector<int> e = g.entries();
    e[i - 1] = i + 1;
    e[i] = i;
    return Clan(std::move(e));
  }
  if (g.at(i) == i + 1) return std::nullopt;
  return conjugate(g, i);
}

inline Permutation underlying_involution(const Clan& g) {
  Permutation w(g.size());
  for (int i = 1; i <= g.size(); ++i) w[i - 1] = g.partner(i);
  return w;
}

inline Clan minimal_clan(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("minimal_clan needs p,q >= 0 and p+q >= 1");
  const int n = p + q, m = std::min(p, q);
  std::vector<int> e(n, p > q ? Clan::PLUS : Clan::MINUS);
  for (int k = 1; k <= m; ++k) {
    e[k - 1] = n - k + 1;
    e[n - k] = k;
  }
  return Clan(std::move(e));
}

inline Clan shift_clan(const Clan& g, int m) {
  if (m < 0) throw std::invalid_argument("shift must be non-negative");
  std::vector<int> e = g.entries();
  for (int step = 0; step < m; ++step) {
    const int n = static_cast<int>(e.size());
    std::vector<int> f(n + 2);
    f[0] = n + 2;
    f[n + 1] = 1;
    for (int i = 0; i < n; ++i) f[i + 1] = e[i] > 0 ? e[i] + 1 : e[i];
    e = std::move(f);
  }
  return Clan(std::move(e));
}

inline Clan rev(const Clan& g) {
  if (!g.is_matchless()) throw std::invalid_argument("rev is defined only on matchless clans");
  std::vector<int> e = g.entries();
  std::reverse(e.begin(), e.end());
  return Clan(std::move(e));
}

inline Clan neg(const Clan& g) {
  std::vector<int> e = g.entries();
  for (int& v : e)
    if (v == Clan::PLUS) v = Clan::MINUS;
    else if (v == Clan::MINUS) v = Clan::PLUS;
  return Clan(std::move(e));
}

struct Profile {
  std::vector<int> phi_plus, phi_minus;
  std::vector<int> lambda_plus, lambda_minus;  // zero parts kept; lengths p and q
};

inline Profile profile(const Clan& g) {
  if (!g.is_matchless()) throw std::invalid_argument("profile is defined only on matchless clans");
  Profile pr;
  for (int i = 1; i <= g.size(); ++i) (g.is_plus(i) ? pr.phi_plus : pr.phi_minus).push_back(i);
  auto count_above = [](const std::vector<int>& other, int x) {
    return static_cast<int>(std::count_if(other.begin(), other.end(), [x](int y) { return y > x; }));
  };
  for (int x : pr.phi_plus) pr.lambda_plus.push_back(count_above(pr.phi_minus, x));
  for (int x : pr.phi_minus) pr.lambda_minus.push_back(count_above(pr.phi_plus, x));
  return pr;
}

/// Matchless clan with plusses at the given positions.
inline Clan matchless_from_plus(int n, const std::vector<int>& phi_plus) {
  std::vector<int> e(n, Clan::MINUS);
  for (int i : phi_plus) e.at(i - 1) = Clan::PLUS;
  return Clan(std::move(e));
}

namespace detail {
inline void enum_clans(std::vector<int>& e, int pos, int plus_left, int minus_left, int arcs_left,
                       std::vector<Clan>& out) {
  const int n = static_cast<int>(e.size());
  while (pos < n && e[pos] != -2) ++pos;
  if (pos == n) {
    if (plus_left == 0 && minus_left == 0 && arcs_left == 0) out.emplace_back(e);
    return;
  }
  if (plus_left > 0) {
    e[pos] = Clan::PLUS;
    enum_clans(e, pos + 1, plus_left - 1, minus_left, arcs_left, out);
  }
  if (minus_left > 0) {
    e[pos] = Clan::MINUS;
    enum_clans(e, pos + 1, plus_left, minus_left - 1, arcs_left, out);
  }
  if (arcs_left > 0) {
    for (int j = pos + 1; j < n; ++j) {
      if (e[j] != -2) continue;
      e[pos] = j + 1;
      e[j] = pos + 1;
      enum_clans(e, pos + 1, plus_left, minus_left, arcs_left - 1, out);
      e[j] = -2;
    }
  }
  e[pos] = -2;
}
}  // namespace detail

/// All (p,q)-clans in canonical order.
inline std::vector<Clan> enumerate_clans(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("enumerate_clans needs p+q >= 1");
  std::vector<Clan> out;
  for (int a = 0; a <= std::min(p, q); ++a) {
    std::vector<int> e(p + q, -2);
    detail::enum_clans(e, 0, p - a, q - a, a, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Matchless (p,q)-clans in canonical order.
inline std::vector<Clan> matchless_clans(int p, int q) {
  std::vector<Clan> out;
  const int n = p + q;
  std::vector<int> e(n, Clan::MINUS);
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != p) continue;
    for (int i = 0; i < n; ++i) e[i] = (mask >> i & 1) ? Clan::PLUS : Clan::MINUS;
    out.emplace_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline nlohmann::json to_json(const Clan& g) {
  nlohmann::json entries = nlohmann::json::array();
  for (int v : g.entries()) {
    if (v == Clan::PLUS) entries.push_back("+");
    else if (v == Clan::MINUS) entries.push_back("-");
    else entries.push_back(v);
  }
  return {{"n", g.size()}, {"entries", entries}};
}

inline Clan clan_from_json(const nlohmann::json& j) {
  std::vector<int> e;
  for (const auto& x : j.at("entries")) {
    if (x.is_string()) e.push_back(detail::parse_token(x.get<std::string>()));
    else e.push_back(x.get<int>());
  }
  if (static_cast<int>(e.size()) != j.at("n").get<int>()) throw parse_error("clan JSON: n mismatch");
  return Clan(std::move(e));
}

}  // namespace clans
