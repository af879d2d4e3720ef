#pragma once

#include "common.hpp"
#include "polynomial.hpp"
#include "schubert.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <vector>

namespace clans {

/// Weakly decreasing parts; zero parts are dropped on construction.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t k = 1; k < parts.size(); ++k)
      if (parts[k] > parts[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    for (int x : parts)
      if (x < 0) throw std::invalid_argument("partition parts must be non-negative");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
  }

  int size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return i <= length() ? parts[i - 1] : 0; }

  Partition conjugate() const {
    std::vector<int> c(parts.empty() ? 0 : parts.front(), 0);
    for (int x : parts)
      for (int j = 0; j < x; ++j) ++c[j];
    return Partition(c);
  }

  /// λ^∨ inside the rows × cols rectangle: λ^∨_i = cols - λ_{rows+1-i}.
  Partition complement(int rows, int cols) const {
    if (length() > rows || (length() > 0 && parts.front() > cols))
      throw std::invalid_argument("partition does not fit in the rectangle");
    std::vector<int> c(rows);
    for (int i = 1; i <= rows; ++i) c[i - 1] = cols - part(rows + 1 - i);
    return Partition(c);
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Strictly decreasing positive parts.
struct StrictPartition {
  std::vector<int> parts;

  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (parts[k] <= 0) throw std::invalid_argument("strict partition parts must be positive");
      if (k > 0 && parts[k] >= parts[k - 1])
        throw std::invalid_argument("strict partition parts must be strictly decreasing");
    }
  }
  int size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;
};

inline nlohmann::json to_json(const Partition& p) { return p.parts; }
inline nlohmann::json to_json(const StrictPartition& p) { return {{"parts", p.parts}, {"strict", true}}; }

/// All partitions inside the rows × cols rectangle, in lexicographic order.
inline std::vector<Partition> partitions_in_rectangle(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int maxpart) {
    if (row == rows) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= maxpart; ++v) {
      cur.push_back(v);
      rec(row + 1, v);
      cur.pop_back();
    }
  };
  rec(0, cols);
  std::sort(out.begin(), out.end());
  return out;
}

/// All strict partitions of every size up to max_size.
inline std::vector<StrictPartition> strict_partitions_upto(int max_size) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int below) {
    if (!cur.empty()) out.emplace_back(cur);
    for (int v = std::min(remaining, below - 1); v >= 1; --v) {
      cur.push_back(v);
      rec(remaining - v, v);
      cur.pop_back();
    }
  };
  rec(max_size, max_size + 1);
  return out;
}

inline Polynomial schur_truncated(const Partition& lambda, int N) {
  if (N < 1) throw std::invalid_argument("need at least one variable");
  if (lambda.length() > N) return Polynomial();
  return flagged_schur(lambda.parts, std::vector<int>(lambda.length(), N));
}

enum class PQKind { P, Q };

/// Schur P via marked shifted semistandard tableaux in x_1..x_N (Q = 2^len · P).
///
/// Letters are encoded as k' -> 2k-1 and k -> 2k.
inline Polynomial schurPQ_truncated(const StrictPartition& lambda, int N, PQKind kind) {
  if (N < 1) throw std::invalid_argument("need at least one variable");
  const int rows = lambda.length();
  std::vector<std::vector<int>> T(rows);
  std::vector<std::pair<int, int>> cells;  // (row, column offset within the row)
  for (int r = 0; r < rows; ++r) {
    T[r].assign(lambda.parts[r], 0);
    for (int c = 0; c < lambda.parts[r]; ++c) cells.emplace_back(r, c);
  }
  Exponent e(N, 0);
  std::map<Exponent, long long, GradedLexGreater> acc;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      Exponent t = e;
      trim(t);
      ++acc[t];
      return;
    }
    auto [r, c] = cells[k];
    // matrix column of (r, c) is r + c; the cell above is row r-1 at offset c+1
    int left = c > 0 ? T[r][c - 1] : 0;
    int up = r > 0 ? T[r - 1][c + 1] : 0;
    for (int v = std::max({1, left, up}); v <= 2 * N; ++v) {
      bool primed = v % 2 == 1;
      if (c == 0 && primed) continue;
      if (v == left && primed) continue;
      if (v == up && !primed) continue;
      T[r][c] = v;
      ++e[(v + 1) / 2 - 1];
      rec(k + 1);
      --e[(v + 1) / 2 - 1];
    }
  };
  rec(0);
  Polynomial f;
  for (const auto& [t, c] : acc) f.add_term(t, BigInt(c));
  if (kind == PQKind::Q) f *= BigInt(1) << rows;
  return f;
}

/// f^λ by the hook-length formula.
inline BigInt count_SYT(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) hooks *= (lambda.part(i) - j) + (conj.part(j) - i) + 1;
  return factorial(lambda.size()) / hooks;
}

/// The doubled shape of a strict partition, as an ordinary partition.
inline Partition doubled_shape(const StrictPartition& mu) {
  const int l = mu.length();
  std::vector<int> rows;
  // row i: the shifted row shifted right by one, plus transposed boxes (i, c) with c <= i
  int height = l == 0 ? 0 : mu.parts[0];
  rows.assign(std::max(height, l), 0);
  for (int i = 1; i <= l; ++i)
    for (int j = i; j <= i + mu.parts[i - 1] - 1; ++j) {
      ++rows[i - 1];  // box (i, j+1)
      ++rows[j - 1];  // transposed box (j, i)
    }
  return Partition(rows);
}

/// Hook lengths of the original shifted boxes inside the doubled shape.
inline std::vector<int> shifted_hooks(const StrictPartition& mu) {
  Partition d = doubled_shape(mu);
  Partition dc = d.conjugate();
  std::vector<int> hooks;
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = i; j <= i + mu.parts[i - 1] - 1; ++j) {
      int col = j + 1;
      hooks.push_back((d.part(i) - col) + (dc.part(col) - i) + 1);
    }
  return hooks;
}

/// g^μ by the shifted hook-length formula.
inline BigInt count_shifted_SYT(const StrictPartition& mu) {
  BigInt prod = 1;
  for (int h : shifted_hooks(mu)) prod *= h;
  return factorial(mu.size()) / prod;
}

/// The staircase (n-1, n-3, ..., |p-q|+1), n = p+q, with min(p,q) parts.
inline StrictPartition staircase(int p, int q) {
  const int n = p + q, m = std::min(p, q);
  std::vector<int> parts;
  for (int i = 1; i <= m; ++i) parts.push_back(n - 2 * i + 1);
  return StrictPartition(parts);
}

struct PQIdentityResult {
  bool equal = false;
  Polynomial lhs, rhs;
};

/// Σ_{λ ⊆ [p]×[q]} s_λ s_{(λ^∨)^t} against Q_staircase, both in x_1..x_N.
inline PQIdentityResult verify_pq_identity(int p, int q, int N) {
  if (p < 0 || q < 0) throw std::invalid_argument("p, q must be non-negative");
  PQIdentityResult r;
  for (const auto& lam : partitions_in_rectangle(p, q)) {
    Partition other = lam.complement(p, q).conjugate();
    r.lhs += schur_truncated(lam, N) * schur_truncated(other, N);
  }
  r.rhs = schurPQ_truncated(staircase(p, q), N, PQKind::Q);
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace clans
