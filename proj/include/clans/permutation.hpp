#pragma once

#include "common.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace clans {

using Word = std::vector<int>;

/// Permutation in one-line notation, values 1..n.
using Permutation = std::vector<int>;

inline Permutation identity_perm(int n) {
  Permutation w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

inline bool is_permutation(const Permutation& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline bool is_involution(const Permutation& w) {
  if (!is_permutation(w)) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[w[i] - 1] != static_cast<int>(i) + 1) return false;
  return true;
}

/// Coxeter length = number of inversions.
inline int length(const Permutation& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

inline Permutation inverse(const Permutation& w) {
  Permutation r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[w[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

/// (u*v)(i) = u(v(i))
inline Permutation compose(const Permutation& u, const Permutation& v) {
  Permutation r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = u[v[i] - 1];
  return r;
}

/// s_{a1} s_{a2} ... s_{al} in S_n.
inline Permutation perm_from_word(int n, const Word& a) {
  Permutation w = identity_perm(n);
  for (int letter : a) {
    if (letter < 1 || letter >= n) throw std::out_of_range("word letter out of range");
    std::swap(w[letter - 1], w[letter]);
  }
  return w;
}

inline bool is_reduced_for(int n, const Word& a) {
  return length(perm_from_word(n, a)) == static_cast<int>(a.size());
}

namespace detail {
inline void perm_words_rec(Permutation& w, Word& suffix, std::vector<Word>& out) {
  bool any = false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) {
      any = true;
      std::swap(w[i], w[i + 1]);
      suffix.push_back(static_cast<int>(i) + 1);
      perm_words_rec(w, suffix, out);
      suffix.pop_back();
      std::swap(w[i], w[i + 1]);
    }
  }
  if (!any) out.emplace_back(suffix.rbegin(), suffix.rend());
}
}  // namespace detail

/// All reduced words of w, sorted lexicographically.
inline std::vector<Word> perm_reduced_words(const Permutation& w) {
  std::vector<Word> out;
  Permutation tmp = w;
  Word suffix;
  detail::perm_words_rec(tmp, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string format_perm(const Permutation& w) {
  bool compact = w.size() <= 9;
  return compact ? join_ints(w, "") : join_ints(w, ",");
}

inline std::vector<int> parse_int_list(const std::string& text, bool allow_compact) {
  std::string t;
  for (char c : text) t += (c == ',' ? ' ' : c);
  std::vector<int> out;
  std::size_t i = 0;
  bool has_sep = text.find_first_of(", \t") != std::string::npos;
  while (i < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[i]))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw parse_error("unexpected character '" + std::string(1, t[i]) + "' in integer list");
    if (!has_sep && allow_compact) {
      out.push_back(t[i] - '0');
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    out.push_back(std::stoi(t.substr(i, j - i)));
    i = j;
  }
  return out;
}

inline Permutation parse_perm(const std::string& text) {
  Permutation w = parse_int_list(text, true);
  if (w.empty()) throw parse_error("empty permutation");
  if (!is_permutation(w)) throw parse_error("not a permutation: " + text);
  return w;
}

/// Words print as "1,2,3"; the empty word prints as "e".
inline std::string format_word(const Word& a) {
  if (a.empty()) return "e";
  return join_ints(a, ",");
}

inline Word parse_word(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.empty() || t == "e" || t == "\xCE\xB5") return {};
  Word a = parse_int_list(text, true);
  for (int v : a)
    if (v < 1) throw parse_error("word letters must be positive");
  return a;
}

inline std::string cycle_notation(const Permutation& w) {
  std::string out;
  std::vector<char> seen(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i] || w[i] == static_cast<int>(i) + 1) continue;
    std::vector<int> cyc;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(static_cast<int>(j) + 1);
      j = w[j] - 1;
    }
    out += "(" + join_ints(cyc, " ") + ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace clans
