#pragma once

#include "clan.hpp"
#include "weak_order.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace clans {

// ---------------------------------------------------------------------------
// Atoms

namespace detail {

class AtomExplorer {
 public:
  explicit AtomExplorer(const Clan& g) : g_(g), n_(g.size()) {}

  /// Completions of w on the positions in S (other positions are 0).
  const std::vector<std::vector<int>>& run(std::uint32_t S) {
    auto it = memo_.find(S);
    if (it != memo_.end()) return it->second;
    std::vector<std::vector<int>> out;
    const int size = __builtin_popcount(S);
    const int s = (n_ - size) / 2;
    if (all_same_sign(S)) {
      std::vector<int> w(n_, 0);
      int v = s + 1;
      for (int i = 1; i <= n_; ++i)
        if (S >> (i - 1) & 1) w[i - 1] = v++;
      out.push_back(std::move(w));
    } else {
      for (int i = 1; i <= n_; ++i) {
        if (!(S >> (i - 1) & 1)) continue;
        int j = 0;
        bool matched = !g_.is_fixed(i);
        if (matched) {
          j = g_.at(i);
          if (j < i) continue;
        } else {
          j = i + 1;
          while (j <= n_ && !(S >> (j - 1) & 1)) ++j;
          if (j > n_ || !g_.is_fixed(j) || g_.at(i) == g_.at(j)) continue;
        }
        if (enclosed(S, i, j)) continue;
        std::uint32_t rest = S & ~(1u << (i - 1)) & ~(1u << (j - 1));
        for (const auto& tail : run(rest)) {
          std::vector<int> w = tail;
          w[i - 1] = matched ? s + 1 : n_ - s;
          w[j - 1] = matched ? n_ - s : s + 1;
          out.push_back(std::move(w));
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return memo_.emplace(S, std::move(out)).first->second;
  }

 private:
  bool all_same_sign(std::uint32_t S) const {
    int sign = 1;  // sentinel: no sign seen yet
    for (int i = 1; i <= n_; ++i) {
      if (!(S >> (i - 1) & 1)) continue;
      if (!g_.is_fixed(i)) return false;
      if (sign == 1) sign = g_.at(i);
      else if (sign != g_.at(i)) return false;
    }
    return true;
  }

  /// Some matched pair i' < i < j < j' with i', j' still in S.
  bool enclosed(std::uint32_t S, int i, int j) const {
    for (int a = 1; a < i; ++a) {
      if (!(S >> (a - 1) & 1)) continue;
      int b = g_.at(a);
      if (b > j && (S >> (b - 1) & 1)) return true;
    }
    return false;
  }

  const Clan& g_;
  int n_;
  std::map<std::uint32_t, std::vector<std::vector<int>>> memo_;
};
}  // namespace detail

/// All atoms of γ, sorted lexicographically.
inline std::vector<Permutation> atoms(const Clan& g) {
  if (g.size() > 30) throw size_cap_error("atoms: n must be at most 30");
  detail::AtomExplorer ex(g);
  std::uint32_t full = g.size() == 32 ? ~0u : ((1u << g.size()) - 1);
  return ex.run(full);
}

// ---------------------------------------------------------------------------
// Shapes

struct Arc {
  int i = 0, j = 0;  // i < j
  bool marked = false;
  int label = 0;  // 0 when unlabelled
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Arcs ordered by label.
struct LabelledShape {
  int n = 0;
  std::vector<Arc> arcs;
  friend bool operator==(const LabelledShape&, const LabelledShape&) = default;
};

/// Arcs ordered by left endpoint; labels are 0.
struct UnlabelledShape {
  int n = 0;
  std::vector<Arc> arcs;
  friend auto operator<=>(const UnlabelledShape&, const UnlabelledShape&) = default;
};

inline UnlabelledShape make_unlabelled(int n, std::vector<Arc> arcs) {
  for (auto& a : arcs) {
    if (a.i > a.j) std::swap(a.i, a.j);
    a.label = 0;
  }
  std::sort(arcs.begin(), arcs.end());
  return {n, std::move(arcs)};
}

inline UnlabelledShape forget_labels(const LabelledShape& s) { return make_unlabelled(s.n, s.arcs); }

/// Labelled matching read off from w, without validity checks.
inline LabelledShape lsh_raw(const Permutation& w, int m) {
  const int n = static_cast<int>(w.size());
  Permutation inv = inverse(w);
  LabelledShape s{n, {}};
  for (int k = 1; k <= m; ++k) {
    int a = inv[k - 1], b = inv[n - k];
    s.arcs.push_back({std::min(a, b), std::max(a, b), a > b, k});
  }
  return s;
}

/// Permutation attached to any labelled marked matching (the inverse of lsh).
inline Permutation lsh_inverse(const LabelledShape& s) {
  const int n = s.n, m = static_cast<int>(s.arcs.size());
  Permutation w(n, 0);
  for (const auto& a : s.arcs) {
    int k = a.label;
    if (a.marked) {
      w[a.j - 1] = k;
      w[a.i - 1] = n - k + 1;
    } else {
      w[a.i - 1] = k;
      w[a.j - 1] = n - k + 1;
    }
  }
  int v = m + 1;
  for (int& x : w)
    if (x == 0) x = v++;
  return w;
}

namespace detail {
inline std::vector<int> point_labels(const LabelledShape& s) {
  std::vector<int> lab(s.n + 1, 0);
  for (const auto& a : s.arcs) lab[a.i] = lab[a.j] = a.label;
  return lab;
}
}  // namespace detail

/// Label rules: every point under a marked arc has a smaller label, and an
/// unmarked arc has a smaller label than the arcs nested inside it.
inline bool labels_consistent(const LabelledShape& s) {
  auto lab = detail::point_labels(s);
  for (const auto& a : s.arcs) {
    if (a.marked)
      for (int x = a.i + 1; x < a.j; ++x)
        if (lab[x] == 0 || lab[x] >= a.label) return false;
    for (const auto& o : s.arcs)
      if (!o.marked && o.i < a.i && a.j < o.j && o.label >= a.label) return false;
  }
  return true;
}

/// Arcs agree with γ: marked arcs join opposite-sign fixed points, unmarked
/// arcs are exactly the matchings of γ, unpaired points share one sign.
inline bool arcs_fit_clan(const std::vector<Arc>& arcs, int n, const Clan& g) {
  if (g.size() != n) return false;
  if (static_cast<int>(arcs.size()) != std::min(g.p(), g.q())) return false;
  std::vector<char> used(n + 1, 0);
  int unmarked = 0;
  for (const auto& a : arcs) {
    if (a.i < 1 || a.j > n || a.i >= a.j || used[a.i] || used[a.j]) return false;
    used[a.i] = used[a.j] = 1;
    if (a.marked) {
      if (!g.is_fixed(a.i) || !g.is_fixed(a.j) || g.at(a.i) == g.at(a.j)) return false;
    } else {
      if (g.at(a.i) != a.j) return false;
      ++unmarked;
    }
  }
  if (unmarked != g.arc_count()) return false;
  int sign = 1;
  for (int x = 1; x <= n; ++x) {
    if (used[x]) continue;
    if (sign == 1) sign = g.at(x);
    else if (g.at(x) != sign) return false;
  }
  return true;
}

inline bool is_labelled_shape_for(const LabelledShape& s, const Clan& g) {
  std::vector<int> labels;
  for (const auto& a : s.arcs) labels.push_back(a.label);
  std::sort(labels.begin(), labels.end());
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] != static_cast<int>(k) + 1) return false;
  return arcs_fit_clan(s.arcs, s.n, g) && labels_consistent(s);
}

/// Shape rules: marked arcs do not cross, and no unpaired point lies under a marked arc.
inline bool shape_geometry_ok(const UnlabelledShape& s) {
  std::vector<char> used(s.n + 1, 0);
  for (const auto& a : s.arcs) used[a.i] = used[a.j] = 1;
  for (const auto& a : s.arcs) {
    if (!a.marked) continue;
    for (int x = a.i + 1; x < a.j; ++x)
      if (!used[x]) return false;
    for (const auto& b : s.arcs)
      if (b.marked && a.i < b.i && b.i < a.j && a.j < b.j) return false;
  }
  return true;
}

inline bool is_unlabelled_shape_for(const UnlabelledShape& s, const Clan& g) {
  return arcs_fit_clan(s.arcs, s.n, g) && shape_geometry_ok(s);
}

/// The sign resolutions of a shape: the clans it is a shape for.
inline std::vector<Clan> shape_clans(const UnlabelledShape& s, int p, int q) {
  if (s.n != p + q) throw std::invalid_argument("shape size does not match p+q");
  std::vector<int> base(s.n, p >= q ? Clan::PLUS : Clan::MINUS);
  std::vector<const Arc*> marked;
  for (const auto& a : s.arcs) {
    if (a.marked) {
      marked.push_back(&a);
    } else {
      base[a.i - 1] = a.j;
      base[a.j - 1] = a.i;
    }
  }
  std::vector<Clan> out;
  const int e = static_cast<int>(marked.size());
  for (int mask = 0; mask < (1 << e); ++mask) {
    std::vector<int> v = base;
    for (int k = 0; k < e; ++k) {
      bool plus_left = !(mask >> k & 1);
      v[marked[k]->i - 1] = plus_left ? Clan::PLUS : Clan::MINUS;
      v[marked[k]->j - 1] = plus_left ? Clan::MINUS : Clan::PLUS;
    }
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// lsh(w) for an atom w of some (p,q)-clan; throws if w is not such an atom.
inline LabelledShape lsh(const Permutation& w, int p, int q) {
  const int n = static_cast<int>(w.size());
  if (n != p + q) throw std::invalid_argument("lsh: permutation size must equal p+q");
  if (!is_permutation(w)) throw std::invalid_argument("lsh: not a permutation");
  const int m = std::min(p, q);
  LabelledShape s = lsh_raw(w, m);
  if (lsh_inverse(s) != w || !labels_consistent(s) || !shape_geometry_ok(forget_labels(s)))
    throw std::invalid_argument("lsh: " + format_perm(w) + " is not an atom of any (" +
                                std::to_string(p) + "," + std::to_string(q) + ")-clan");
  return s;
}

inline UnlabelledShape ush(const Permutation& w, int p, int q) { return forget_labels(lsh(w, p, q)); }

/// Γ(w) for an atom w: the 2^e sign resolutions of its marked arcs.
inline std::vector<Clan> gamma_set(const Permutation& w, int p, int q) {
  return shape_clans(ush(w, p, q), p, q);
}

/// Γ(a) for a word: clans having a as a reduced word, by brute force.
inline std::vector<Clan> gamma_set_word(const Word& a, int p, int q) {
  std::vector<Clan> out;
  for (const auto& g : enumerate_clans(p, q))
    if (is_reduced_word(g, a)) out.push_back(g);
  return out;
}

/// u -> s_k s_{n-k} u: swap values k, k+1 and n-k, n-k+1.
inline Permutation atom_move(const Permutation& u, int k) {
  const int n = static_cast<int>(u.size());
  Permutation v = u;
  auto swap_values = [&v](int a, int b) {
    for (int& x : v) x = x == a ? b : x == b ? a : x;
  };
  swap_values(k, k + 1);
  swap_values(n - k, n - k + 1);
  return v;
}

/// Labelled shape for σ: marked arcs in order of right endpoint, every other
/// arc as early as the label rules allow.
inline LabelledShape standard_labelling(const UnlabelledShape& s) {
  const int e = static_cast<int>(s.arcs.size());
  // before[x][y]: arc x must get a smaller label than arc y
  std::vector<std::vector<char>> before(e, std::vector<char>(e, 0));
  for (int x = 0; x < e; ++x)
    for (int y = 0; y < e; ++y) {
      if (x == y) continue;
      const Arc &a = s.arcs[x], &b = s.arcs[y];
      if (!a.marked && a.i < b.i && b.j < a.j) before[x][y] = 1;
      if (b.marked && ((b.i < a.i && a.i < b.j) || (b.i < a.j && a.j < b.j))) before[x][y] = 1;
    }
  std::vector<int> indeg(e, 0);
  for (int x = 0; x < e; ++x)
    for (int y = 0; y < e; ++y) indeg[y] += before[x][y];
  LabelledShape out{s.n, {}};
  std::vector<char> done(e, 0);
  for (int step = 1; step <= e; ++step) {
    int pick = -1;
    for (int x = 0; x < e; ++x)
      if (!done[x] && indeg[x] == 0 && (pick < 0 || s.arcs[x].j < s.arcs[pick].j)) pick = x;
    if (pick < 0) throw std::invalid_argument("shape has cyclic label constraints");
    done[pick] = 1;
    for (int y = 0; y < e; ++y) indeg[y] -= before[pick][y];
    Arc a = s.arcs[pick];
    a.label = step;
    out.arcs.push_back(a);
  }
  return out;
}

/// st(σ): the atom of the standard labelling.
inline Permutation shape_atom(const UnlabelledShape& s) {
  if (!shape_geometry_ok(s)) throw std::invalid_argument("shape_atom: invalid shape");
  return lsh_inverse(standard_labelling(s));
}

/// Shapes reachable in one move (uncrossing nested marked arcs, or sliding a
/// marked arc left onto an unpaired point); results are filtered for validity.
inline std::vector<UnlabelledShape> shape_successors(const UnlabelledShape& s, const Clan& g) {
  if (!is_unlabelled_shape_for(s, g)) throw std::invalid_argument("shape is not valid for the clan");
  const int n = s.n;
  std::vector<int> mate(n + 1, 0);
  for (const auto& a : s.arcs) mate[a.i] = a.j, mate[a.j] = a.i;
  auto no_unpaired = [&](int lo, int hi) {
    for (int x = lo + 1; x < hi; ++x)
      if (!mate[x]) return false;
    return true;
  };
  std::set<UnlabelledShape> out;
  auto push = [&](std::vector<Arc> arcs) {
    auto t = make_unlabelled(n, std::move(arcs));
    if (is_unlabelled_shape_for(t, g)) out.insert(t);
  };
  for (std::size_t x = 0; x < s.arcs.size(); ++x) {
    const Arc& outer = s.arcs[x];
    if (!outer.marked) continue;
    for (std::size_t y = 0; y < s.arcs.size(); ++y) {
      const Arc& inner = s.arcs[y];
      if (!inner.marked || !(outer.i < inner.i && inner.j < outer.j)) continue;
      int a = outer.i, b = inner.i, c = inner.j, d = outer.j;
      if (g.at(a) != g.at(c) || !no_unpaired(a, d)) continue;
      std::vector<Arc> arcs;
      for (std::size_t z = 0; z < s.arcs.size(); ++z)
        if (z != x && z != y) arcs.push_back(s.arcs[z]);
      arcs.push_back({a, b, true, 0});
      arcs.push_back({c, d, true, 0});
      push(std::move(arcs));
    }
  }
  for (std::size_t x = 0; x < s.arcs.size(); ++x) {
    const Arc& arc = s.arcs[x];
    if (!arc.marked) continue;
    int b = arc.i, c = arc.j;
    for (int a = 1; a < b; ++a) {
      if (mate[a] || g.at(a) != g.at(c) || !no_unpaired(a, c)) continue;
      std::vector<Arc> arcs;
      for (std::size_t z = 0; z < s.arcs.size(); ++z)
        if (z != x) arcs.push_back(s.arcs[z]);
      arcs.push_back({a, b, true, 0});
      push(std::move(arcs));
    }
  }
  return {out.begin(), out.end()};
}

/// Greedy construction of the unique maximal shape of γ.
inline UnlabelledShape sigma_max(const Clan& g) {
  const int n = g.size();
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i)
    if (!g.is_fixed(i) && g.at(i) > i) arcs.push_back({i, g.at(i), false, 0});
  std::vector<int> fixed;
  for (int i = 1; i <= n; ++i)
    if (g.is_fixed(i)) fixed.push_back(i);
  for (;;) {
    bool joined = false;
    for (std::size_t k = 0; k + 1 < fixed.size(); ++k) {
      if (g.at(fixed[k]) != g.at(fixed[k + 1])) {
        arcs.push_back({fixed[k], fixed[k + 1], true, 0});
        fixed.erase(fixed.begin() + static_cast<long>(k), fixed.begin() + static_cast<long>(k) + 2);
        joined = true;
        break;
      }
    }
    if (!joined) break;
  }
  return make_unlabelled(n, std::move(arcs));
}

/// ush(A(γ)) in canonical order.
inline std::vector<UnlabelledShape> clan_shapes(const Clan& g) {
  std::set<UnlabelledShape> out;
  for (const auto& w : atoms(g)) out.insert(ush(w, g.p(), g.q()));
  return {out.begin(), out.end()};
}

struct ShapePoset {
  std::vector<UnlabelledShape> shapes;
  std::vector<std::pair<int, int>> moves;   // every single move σ -> σ'
  std::vector<std::pair<int, int>> covers;  // transitive reduction of the moves
};

inline ShapePoset shape_poset(const Clan& g) {
  ShapePoset P;
  P.shapes = clan_shapes(g);
  const int k = static_cast<int>(P.shapes.size());
  auto index = [&](const UnlabelledShape& s) {
    return static_cast<int>(std::lower_bound(P.shapes.begin(), P.shapes.end(), s) - P.shapes.begin());
  };
  std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
  for (int x = 0; x < k; ++x)
    for (const auto& t : shape_successors(P.shapes[x], g)) {
      int y = index(t);
      if (y >= k || !(P.shapes[y] == t)) throw std::logic_error("shape move left ush(A(γ))");
      P.moves.emplace_back(x, y);
      reach[x][y] = 1;
    }
  // transitive closure (Floyd–Warshall style)
  auto closure = reach;
  for (int z = 0; z < k; ++z)
    for (int x = 0; x < k; ++x)
      if (closure[x][z])
        for (int y = 0; y < k; ++y)
          if (closure[z][y]) closure[x][y] = 1;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (!closure[x][y]) continue;
      bool via = false;
      for (int z = 0; z < k && !via; ++z) via = z != x && z != y && closure[x][z] && closure[z][y];
      if (!via) P.covers.emplace_back(x, y);
    }
  return P;
}

// ---------------------------------------------------------------------------
// Word equivalence

struct EquivalenceReport {
  std::vector<std::vector<Word>> classes;  // classes of reduced words, each sorted
  bool pure = true;                        // no class leaves the reduced words
  bool matches_gamma_fibers = true;        // classes are exactly the Γ-fibers
  long long reduced_words = 0;
};

inline bool flip_allowed(int a1, int n, int p, int q) { return std::min(a1, n - a1) < std::min(p, q); }

/// Words one relation away: commutations, braid moves and the guarded first-letter flip.
inline std::vector<Word> equivalence_neighbours(const Word& a, int n, int p, int q) {
  std::vector<Word> out;
  const std::size_t L = a.size();
  for (std::size_t k = 0; k + 1 < L; ++k) {
    if (std::abs(a[k] - a[k + 1]) > 1) {
      Word b = a;
      std::swap(b[k], b[k + 1]);
      out.push_back(std::move(b));
    }
  }
  for (std::size_t k = 0; k + 2 < L; ++k) {
    if (a[k] == a[k + 2] && std::abs(a[k] - a[k + 1]) == 1) {
      Word b = a;
      b[k] = b[k + 2] = a[k + 1];
      b[k + 1] = a[k];
      out.push_back(std::move(b));
    }
  }
  if (L > 0 && flip_allowed(a[0], n, p, q) && a[0] != n - a[0]) {
    Word b = a;
    b[0] = n - a[0];
    out.push_back(std::move(b));
  }
  return out;
}

inline EquivalenceReport equivalence_classes(int p, int q, bool force = false) {
  check_cap(p, q, force, 7);
  const int n = p + q;
  std::map<Word, std::vector<int>> fiber;  // word -> indices of clans in Γ(word)
  auto all = enumerate_clans(p, q);
  ReducedWordEnumerator words;
  for (std::size_t k = 0; k < all.size(); ++k)
    for (const auto& a : words(all[k])) fiber[a].push_back(static_cast<int>(k));
  EquivalenceReport rep;
  rep.reduced_words = static_cast<long long>(fiber.size());
  std::set<Word> seen;
  for (const auto& [start, gam] : fiber) {
    if (seen.count(start)) continue;
    std::vector<Word> cls{start};
    seen.insert(start);
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (auto& b : equivalence_neighbours(cls[head], n, p, q)) {
        if (seen.count(b)) continue;
        if (!fiber.count(b)) {
          rep.pure = false;
          continue;
        }
        seen.insert(b);
        cls.push_back(std::move(b));
      }
    }
    std::sort(cls.begin(), cls.end());
    for (const auto& b : cls)
      if (fiber.at(b) != gam) rep.matches_gamma_fibers = false;
    rep.classes.push_back(std::move(cls));
  }
  // every Γ-fiber must be a single class
  std::map<std::vector<int>, int> fiber_classes;
  for (const auto& cls : rep.classes) ++fiber_classes[fiber.at(cls.front())];
  for (const auto& [gam, count] : fiber_classes)
    if (count != 1) rep.matches_gamma_fibers = false;
  std::sort(rep.classes.begin(), rep.classes.end());
  return rep;
}

// ---------------------------------------------------------------------------
// Output

/// Arcs drawn below the points; unmarked arcs use '-', marked arcs '='.
inline std::string render_shape(const std::vector<Arc>& arcs, int n, const Clan* g = nullptr) {
  const int width = 2 * n - 1;
  std::vector<Arc> order = arcs;
  std::sort(order.begin(), order.end(),
            [](const Arc& a, const Arc& b) { return a.j - a.i < b.j - b.i; });
  std::vector<int> level(order.size(), 0);
  for (std::size_t x = 0; x < order.size(); ++x) {
    int lv = 1;
    for (std::size_t y = 0; y < x; ++y) {
      bool overlap = !(order[y].j < order[x].i || order[x].j < order[y].i);
      if (overlap) lv = std::max(lv, level[y] + 1);
    }
    level[x] = lv;
  }
  int depth = 0;
  for (int lv : level) depth = std::max(depth, lv);
  std::vector<std::string> rows;
  std::string top(width, ' ');
  for (int i = 1; i <= n; ++i) {
    if (g) {
      std::string t = g->tokens()[i - 1];
      top[2 * (i - 1)] = t.size() == 1 ? t[0] : '*';
    } else {
      top[2 * (i - 1)] = 'o';
    }
  }
  rows.push_back(top);
  for (int r = 1; r <= depth; ++r) rows.emplace_back(width, ' ');
  for (std::size_t x = 0; x < order.size(); ++x) {
    const Arc& a = order[x];
    int c1 = 2 * (a.i - 1), c2 = 2 * (a.j - 1);
    for (int r = 1; r < level[x]; ++r) rows[r][c1] = rows[r][c2] = '|';
    auto& row = rows[level[x]];
    for (int c = c1 + 1; c < c2; ++c)
      if (row[c] != '|') row[c] = a.marked ? '=' : '-';
    row[c1] = row[c2] = '+';
    if (a.label > 0) {
      std::string lab = std::to_string(a.label);
      int mid = (c1 + c2) / 2 - static_cast<int>(lab.size()) / 2;
      for (std::size_t k = 0; k < lab.size(); ++k)
        if (mid + static_cast<int>(k) > c1 && mid + static_cast<int>(k) < c2) row[mid + k] = lab[k];
    }
  }
  std::string out;
  for (auto& r : rows) {
    while (!r.empty() && r.back() == ' ') r.pop_back();
    out += r + "\n";
  }
  return out;
}

inline std::string format_arcs(const std::vector<Arc>& arcs) {
  std::string out;
  for (const auto& a : arcs) {
    if (!out.empty()) out += ' ';
    out += (a.marked ? "{" : "(") + std::to_string(a.i) + "," + std::to_string(a.j) +
           (a.marked ? "}" : ")");
    if (a.label > 0) out += ":" + std::to_string(a.label);
  }
  return out.empty() ? "(no arcs)" : out;
}

inline nlohmann::json shape_to_json(int n, const std::vector<Arc>& arcs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : arcs) {
    nlohmann::json lab = x.label > 0 ? nlohmann::json(x.label) : nlohmann::json(nullptr);
    a.push_back({x.i, x.j, x.marked, lab});
  }
  return {{"n", n}, {"arcs", a}};
}

inline nlohmann::json to_json(const LabelledShape& s) { return shape_to_json(s.n, s.arcs); }
inline nlohmann::json to_json(const UnlabelledShape& s) { return shape_to_json(s.n, s.arcs); }

inline std::vector<Arc> arcs_from_json(const nlohmann::json& j) {
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs"))
    arcs.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<bool>(), a[3].is_null() ? 0 : a[3].get<int>()});
  return arcs;
}

}  // namespace clans
