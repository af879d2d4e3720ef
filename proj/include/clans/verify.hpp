#pragma once

#include "atoms.hpp"
#include "counting.hpp"
#include "maximizer.hpp"
#include "schubert.hpp"
#include "symfun.hpp"

#include <set>
#include <string>
#include <vector>

namespace clans {

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;

  void check(bool passed, const std::string& what) {
    ok = ok && passed;
    lines.push_back((passed ? "OK: " : "FAIL: ") + what);
  }
};

struct VerifyBounds {
  int max_n = -1;  // -1 selects the suite default
  int p = 2, q = 2, vars = 5;
};

namespace detail {

inline std::vector<Clan> clans_upto(int max_n) {
  std::vector<Clan> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p)
      for (auto& g : enumerate_clans(p, n - p)) out.push_back(std::move(g));
  return out;
}

inline std::string count_line(long long k, const std::string& what) { return std::to_string(k) + " " + what; }

}  // namespace detail

/// Word equivalence: classes are pure and coincide with the Γ-fibers.
inline VerifyReport verify_mt(const VerifyBounds& b) {
  const int max_n = b.max_n < 0 ? 6 : b.max_n;
  VerifyReport rep;
  long long classes = 0;
  bool ok = true;
  std::string bad;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p) {
      auto r = equivalence_classes(p, n - p, true);
      classes += static_cast<long long>(r.classes.size());
      if (!r.pure || !r.matches_gamma_fibers) {
        ok = false;
        bad += " (" + std::to_string(p) + "," + std::to_string(n - p) + ")";
      }
    }
  rep.check(ok, "1 theorem, " + detail::count_line(classes, "classes checked") + (bad.empty() ? "" : "; failing" + bad));
  return rep;
}

/// Clan Schubert polynomials: the ∂ recurrence, the Wyser–Yong agreement over all chains, atoms.
inline VerifyReport verify_schubert(const VerifyBounds& b) {
  const int max_n = b.max_n < 0 ? 5 : b.max_n;
  VerifyReport rep;
  auto all = detail::clans_upto(max_n);
  long long rec = 0, wy = 0, at = 0;
  bool rec_ok = true, wy_ok = true, at_ok = true;
  WyserYongAllChains chains;
  for (const auto& g : all) {
    Polynomial s = schubert_clan(g);
    auto downs = down_covers(g);
    for (int i = 1; i < g.size(); ++i) {
      Polynomial expect;
      for (const auto& c : downs)
        if (c.label == i) expect = schubert_clan(c.clan);
      ++rec;
      if (!(divided_difference(s, i) == expect)) rec_ok = false;
    }
    const auto& vals = chains(g);
    ++wy;
    if (vals.size() != 1 || !(vals.front() == s)) wy_ok = false;
    Polynomial sum;
    for (const auto& w : atoms(g)) sum += schubert_perm(w);
    ++at;
    if (!(sum == s)) at_ok = false;
  }
  rep.check(rec_ok, detail::count_line(rec, "divided difference steps match the clan recurrence"));
  rep.check(wy_ok, detail::count_line(wy, "clans agree with the Wyser-Yong value along every chain"));
  rep.check(at_ok, detail::count_line(at, "clans equal the sum of their atoms' Schubert polynomials"));
  return rep;
}

/// Stanley truncations: both methods agree, squarefree coefficients count words,
/// and matchless clans give s_{λ+} s_{λ-}.
inline VerifyReport verify_stanley(const VerifyBounds& b) {
  const int max_n = b.max_n < 0 ? 5 : b.max_n;
  VerifyReport rep;
  long long agree = 0, sqf = 0, prod = 0;
  bool agree_ok = true, sqf_ok = true, prod_ok = true;
  for (const auto& g : detail::clans_upto(max_n)) {
    const int n = g.size();
    Polynomial schub = schubert_clan(g);
    BigInt words = count_reduced_words(g);
    int len = 0;
    {
      auto w = reduced_words(g);
      len = static_cast<int>(w.front().size());
    }
    for (int N : {n, n + 1}) {
      ++agree;
      if (!(stanley_truncated(g, N) == stanley_truncated_isobaric(g, N))) agree_ok = false;
    }
    const int N = std::max(len, 1);
    ++sqf;
    if (stanley_truncated(g, N).coefficient(Exponent(len, 1)) != words) sqf_ok = false;
    if (g.is_matchless()) {
      Profile pr = profile(g);
      for (int M : {n, n + 1}) {
        ++prod;
        Polynomial rhs = schur_truncated(Partition(pr.lambda_plus), M) * schur_truncated(Partition(pr.lambda_minus), M);
        if (!(pi_longest(schub, M) == rhs)) prod_ok = false;
      }
    }
  }
  rep.check(agree_ok, detail::count_line(agree, "truncations agree between the word and isobaric methods"));
  rep.check(sqf_ok, detail::count_line(sqf, "squarefree coefficients equal the reduced word count"));
  rep.check(prod_ok, detail::count_line(prod, "matchless truncations equal s_{lambda+} s_{lambda-}"));
  return rep;
}

/// Maximal chains, the 2^κ correspondence, ι, and w_{p,q}.
inline VerifyReport verify_chains(const VerifyBounds& b) {
  const int max_n = b.max_n < 0 ? 6 : b.max_n;
  VerifyReport rep;
  long long formula = 0, corr = 0, lifts = 0, iota = 0, top = 0, hat = 0;
  bool formula_ok = true, corr_ok = true, iota_ok = true, top_ok = true, hat_ok = true;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      ++formula;
      BigInt enumerated = count_maximal_chains(p, q, true);
      if (enumerated != maximal_chain_formula(p, q) || enumerated != maximal_chain_hook_form(p, q))
        formula_ok = false;
      auto cr = chain_correspondence_check(p, q, true);
      ++corr;
      lifts += cr.chains_checked;
      if (!cr.ok) corr_ok = false;
      if (n <= 5) {
        auto ir = iota_check(p, q, true);
        ++iota;
        if (!ir.order_reversing || !ir.image_is_Ipq || !ir.fiber_sizes_ok) iota_ok = false;
      }
      ++top;
      auto maxes = maximal_in_Ipq(p, q);
      if (maxes.size() != 1 || maxes.front() != w_pq(p, q)) top_ok = false;
      ++hat;
      BigInt words(involution_words(w_pq(p, q)).size());
      const int lo = std::min(p, q), hi = std::max(p, q);
      if (words != (BigInt(1) << (hi * lo - lo)) * count_shifted_SYT(staircase(p, q))) hat_ok = false;
    }
  rep.check(formula_ok, detail::count_line(formula, "(p,q) maximal chain counts equal the closed formula"));
  rep.check(corr_ok, detail::count_line(corr, "(p,q) satisfy the 2^kappa chain correspondence (") +
                         std::to_string(lifts) + " clan/chain pairs)");
  rep.check(iota_ok, detail::count_line(iota, "(p,q) have an order-reversing iota onto I_{p,q} with binomial fibers"));
  rep.check(top_ok, detail::count_line(top, "(p,q) have w_{p,q} as the unique maximum of I_{p,q}"));
  rep.check(hat_ok, detail::count_line(hat, "(p,q) have #involution words of w_{p,q} = 2^{pq-min(p,q)} g^staircase"));
  return rep;
}

/// Σ_λ s_λ s_{(λ^∨)^t} = Q_staircase in the given number of variables.
inline VerifyReport verify_identity(const VerifyBounds& b) {
  VerifyReport rep;
  auto r = verify_pq_identity(b.p, b.q, b.vars);
  rep.lines.push_back("lhs = " + r.lhs.str());
  rep.lines.push_back("rhs = " + r.rhs.str());
  rep.check(r.equal, "identity for (p,q) = (" + std::to_string(b.p) + "," + std::to_string(b.q) + ") in " +
                         std::to_string(b.vars) + " variables");
  return rep;
}

/// Atoms, shapes and the shape move graph.
inline VerifyReport verify_shapes(const VerifyBounds& b) {
  const int max_n = b.max_n < 0 ? 6 : b.max_n;
  VerifyReport rep;
  long long atom_n = 0, union_n = 0, roundtrip = 0, gamma_n = 0, sink_n = 0;
  bool atom_ok = true, union_ok = true, rt_ok = true, gamma_ok = true, sink_ok = true;
  for (const auto& g : detail::clans_upto(max_n)) {
    const int n = g.size(), p = g.p(), q = g.q();
    auto words = reduced_words(g);
    std::set<Permutation> from_words;
    for (const auto& a : words) from_words.insert(perm_from_word(n, a));
    auto at = atoms(g);
    ++atom_n;
    if (std::set<Permutation>(at.begin(), at.end()) != from_words) atom_ok = false;
    std::size_t total = 0;
    for (const auto& w : at) total += perm_reduced_words(w).size();
    ++union_n;
    if (total != words.size()) union_ok = false;
    for (const auto& w : at) {
      ++roundtrip;
      auto s = lsh(w, p, q);
      if (lsh_inverse(s) != w) rt_ok = false;
      Permutation rep_atom = shape_atom(forget_labels(s));
      if (!std::binary_search(at.begin(), at.end(), rep_atom) || !(ush(rep_atom, p, q) == forget_labels(s)))
        rt_ok = false;
      auto gs = gamma_set(w, p, q);
      ++gamma_n;
      if (gs != gamma_set_word(perm_reduced_words(w).front(), p, q)) gamma_ok = false;
    }
    auto P = shape_poset(g);
    ++sink_n;
    std::vector<int> out_degree(P.shapes.size(), 0);
    for (auto& [x, y] : P.moves) ++out_degree[x];
    int sinks = 0;
    for (std::size_t k = 0; k < P.shapes.size(); ++k)
      if (out_degree[k] == 0) {
        ++sinks;
        if (!(P.shapes[k] == sigma_max(g))) sink_ok = false;
      }
    if (sinks != 1) sink_ok = false;
  }
  rep.check(atom_ok, detail::count_line(atom_n, "clans have atoms equal to the products of their reduced words"));
  rep.check(union_ok, detail::count_line(union_n, "clans have R(gamma) the disjoint union of R(w) over atoms"));
  rep.check(rt_ok, detail::count_line(roundtrip, "atoms round-trip through their labelled shapes"));
  rep.check(gamma_ok, detail::count_line(gamma_n, "atoms have Gamma(w) equal to the sign resolutions of ush(w)"));
  rep.check(sink_ok, detail::count_line(sink_n, "shape move graphs have sigma_max as their unique sink"));
  return rep;
}

/// The real minimizer bound, the p = 2 candidate grid, monotonicity, continuity, the density.
inline VerifyReport verify_maximizer(const VerifyBounds& b) {
  const int max_n = b.max_n < 0 ? 200 : b.max_n;
  VerifyReport rep;
  bool bound_ok = true;
  long long bounds = 0;
  for (int n = 3; n <= max_n; ++n) {
    ++bounds;
    auto r = minimize_f(2, n, 1e-6);
    if (std::abs(static_cast<double>(r.phi[0]) - alpha1(n)) > 33.0 / 64 + 1e-6) bound_ok = false;
  }
  rep.check(bound_ok, detail::count_line(bounds, "minimizers within 33/64 of alpha_1"));
  bool grid_ok = true;
  long long grid = 0;
  for (int q = 1; q <= 12; ++q)
    for (const auto& g : argmax_reduced_words(2, q)) {
      ++grid;
      if (!in_candidate_grid(g)) grid_ok = false;
    }
  rep.check(grid_ok, detail::count_line(grid, "(2,q) maximizers inside the candidate grid"));
  bool mono_ok = true, cont_ok = true;
  long long mono = 0, cont = 0;
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      auto m = monotonicity_check(p, n - p);
      mono += m.pairs_checked;
      mono_ok = mono_ok && m.ok;
    }
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      auto c = continuity_check(p, n - p);
      cont += c.pairs_checked;
      cont_ok = cont_ok && c.ok;
    }
  rep.check(mono_ok, detail::count_line(mono, "comparable pairs satisfy the appended-minus monotonicity"));
  rep.check(cont_ok, detail::count_line(cont, "maximizer pairs differ by 0/1 vectors from (p,q) to (p,q+1)"));
  bool sym_ok = true;
  for (double theta : {0.25, 0.5, 1.0})
    for (int k = 0; k <= 1000; ++k) {
      double t = k / 1000.0;
      if (std::abs(limit_density(t, theta) - limit_density(1 - t, theta)) > 1e-12) sym_ok = false;
    }
  rep.check(sym_ok, "limit density symmetric about 1/2 for theta in {0.25, 0.5, 1}");
  return rep;
}

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"mt", "schubert", "stanley", "chains", "identity", "shapes", "maximizer"};
  return names;
}

inline VerifyReport run_verify(const std::string& suite, const VerifyBounds& b) {
  if (suite == "mt") return verify_mt(b);
  if (suite == "schubert") return verify_schubert(b);
  if (suite == "stanley") return verify_stanley(b);
  if (suite == "chains") return verify_chains(b);
  if (suite == "identity") return verify_identity(b);
  if (suite == "shapes") return verify_shapes(b);
  if (suite == "maximizer") return verify_maximizer(b);
  throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

}  // namespace clans
