#pragma once

#include "common.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace clans {

/// Exponent vector; entry k is the power of x_{k+1}. Trailing zeros are trimmed.
using Exponent = std::vector<int>;

inline void trim(Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

inline int degree_of(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

/// Graded lexicographic order, largest first.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      int x = k < a.size() ? a[k] : 0, y = k < b.size() ? b[k] : 0;
      if (x != y) return x > y;
    }
    return false;
  }
};

/// Sparse polynomial in x_1, x_2, ... with arbitrary-precision integer coefficients.
class Polynomial {
 public:
  using Terms = std::map<Exponent, BigInt, GradedLexGreater>;

  Polynomial() = default;
  Polynomial(long long c) {  // NOLINT: implicit constants are convenient
    if (c != 0) terms_[{}] = c;
  }
  explicit Polynomial(const BigInt& c) {
    if (c != 0) terms_[{}] = c;
  }

  static Polynomial monomial(Exponent e, const BigInt& c = 1) {
    Polynomial p;
    trim(e);
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  /// x_i
  static Polynomial var(int i) {
    Exponent e(i, 0);
    e[i - 1] = 1;
    return monomial(e);
  }

  /// x_{b_1} x_{b_2} ... x_{b_l}
  static Polynomial from_indices(const std::vector<int>& b) {
    Exponent e;
    for (int x : b) {
      if (static_cast<int>(e.size()) < x) e.resize(x, 0);
      ++e[x - 1];
    }
    return monomial(e);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(Exponent e) const {
    trim(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Largest variable index appearing.
  int num_vars() const {
    int v = 0;
    for (const auto& [e, c] : terms_) v = std::max(v, static_cast<int>(e.size()));
    return v;
  }

  int degree() const {
    return terms_.empty() ? -1 : degree_of(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [e, c] : terms_)
      if (degree_of(e) != d) return false;
    return true;
  }

  void add_term(Exponent e, const BigInt& c) {
    if (c == 0) return;
    trim(e);
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const BigInt& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= BigInt(-1); }
  friend Polynomial operator*(Polynomial a, const BigInt& k) { return a *= k; }
  friend Polynomial operator*(const BigInt& k, Polynomial a) { return a *= k; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
        for (std::size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// f with x_i and x_{i+1} exchanged.
  Polynomial swap_vars(int i) const {
    Polynomial r;
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      if (static_cast<int>(f.size()) < i + 1) f.resize(i + 1, 0);
      std::swap(f[i - 1], f[i]);
      r.add_term(std::move(f), c);
    }
    return r;
  }

  /// Drops every term involving a variable beyond x_N.
  Polynomial restrict_vars(int N) const {
    Polynomial r;
    for (const auto& [e, c] : terms_)
      if (static_cast<int>(e.size()) <= N) r.terms_.emplace(e, c);
    return r;
  }

  /// Invariant under all swaps x_i <-> x_{i+1}, i < N.
  bool is_symmetric(int N) const {
    for (int i = 1; i < N; ++i)
      if (!(swap_vars(i) == *this)) return false;
    return true;
  }

  /// "x1^3*x2 + x1^3*x3 - 2*x1^2*x2*x3", terms in graded-lex order; "0" for zero.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt a = abs(c);
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(k + 1);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      std::string body;
      if (mono.empty()) body = a.str();
      else if (a == 1) body = mono;
      else body = a.str() + "*" + mono;
      if (first) out += (c < 0 ? "-" : "") + body;
      else out += (c < 0 ? " - " : " + ") + body;
      first = false;
    }
    return out;
  }

 private:
  Terms terms_;
};

inline std::string to_string(const Polynomial& p) { return p.str(); }

/// Parses the text form produced by Polynomial::str().
inline Polynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty polynomial");
  Polynomial out;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& k) {
    std::size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (start == k) throw parse_error("expected a number in polynomial '" + text + "'");
    return s.substr(start, k - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    BigInt coef = 1;
    Exponent e;
    bool any = false;
    for (;;) {
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef *= BigInt(read_int(i));
        any = true;
      } else if (i < s.size() && s[i] == 'x') {
        ++i;
        int v = std::stoi(read_int(i));
        int pw = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          pw = std::stoi(read_int(i));
        }
        if (v < 1) throw parse_error("variable index must be positive");
        if (static_cast<int>(e.size()) < v) e.resize(v, 0);
        e[v - 1] += pw;
        any = true;
      } else {
        throw parse_error("unexpected text in polynomial '" + text + "'");
      }
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) throw parse_error("empty term in polynomial '" + text + "'");
    out.add_term(e, coef * sign);
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw parse_error("bad polynomial '" + text + "'");
  }
  return out;
}

/// ∂_i f = (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.
inline Polynomial divided_difference(const Polynomial& f, int i) {
  if (i < 1) throw std::out_of_range("divided difference index must be positive");
  Polynomial r;
  for (const auto& [e0, c] : f.terms()) {
    Exponent e = e0;
    if (static_cast<int>(e.size()) < i + 1) e.resize(i + 1, 0);
    int a = e[i - 1], b = e[i];
    if (a == b) continue;
    int lo = std::min(a, b), hi = std::max(a, b);
    BigInt sgn = a > b ? 1 : -1;
    // x_i^lo x_{i+1}^lo * sum_{k} x_i^{hi-lo-1-k} x_{i+1}^k
    for (int k = 0; k < hi - lo; ++k) {
      Exponent t = e;
      t[i - 1] = lo + (hi - lo - 1 - k);
      t[i] = lo + k;
      r.add_term(std::move(t), sgn * c);
    }
  }
  return r;
}

/// π_i f = ∂_i(x_i f)
inline Polynomial isobaric(const Polynomial& f, int i) { return divided_difference(Polynomial::var(i) * f, i); }

/// Applies ∂ (or π) along a word: op_{a_1} op_{a_2} ... op_{a_l} f, rightmost first.
inline Polynomial apply_divided_word(Polynomial f, const std::vector<int>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(f, *it);
  return f;
}

inline Polynomial apply_isobaric_word(Polynomial f, const std::vector<int>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = isobaric(f, *it);
  return f;
}

/// The reduced word a^{N-1} ... a^2 a^1 of w_N, a^i = i (i+1) ... (N-1).
inline std::vector<int> longest_word(int N) {
  std::vector<int> w;
  for (int i = N - 1; i >= 1; --i)
    for (int k = i; k <= N - 1; ++k) w.push_back(k);
  return w;
}

inline Polynomial pi_longest(const Polynomial& f, int N) { return apply_isobaric_word(f, longest_word(N)); }

inline nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({e, c.str()});
  return j;
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
  Polynomial p;
  for (const auto& t : j) p.add_term(t[0].get<Exponent>(), BigInt(t[1].get<std::string>()));
  return p;
}

}  // namespace clans
