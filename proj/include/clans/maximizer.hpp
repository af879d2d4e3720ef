#pragma once

#include "clan.hpp"
#include "counting.hpp"
#include "weak_order.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace clans {

using Quad = boost::multiprecision::cpp_bin_float_quad;

/// log f(φ) = Σ [log Γ(φ_k) + log Γ(n+1-φ_k)] - 2 Σ_{k<l} log(φ_l - φ_k).
template <class Real>
Real log_f(const std::vector<Real>& phi, int n) {
  using std::log;
  Real total = 0;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (phi[k] < 1 || phi[k] > n) throw std::domain_error("log_f: coordinate outside [1, n]");
    if (k > 0 && !(phi[k - 1] < phi[k])) throw std::domain_error("log_f: coordinates must increase");
    total += boost::math::lgamma(phi[k]) + boost::math::lgamma(Real(n + 1) - phi[k]);
  }
  for (std::size_t k = 0; k < phi.size(); ++k)
    for (std::size_t l = k + 1; l < phi.size(); ++l) total -= 2 * log(phi[l] - phi[k]);
  return total;
}

inline double log_f(const std::vector<int>& phi, int n) {
  std::vector<long double> x(phi.begin(), phi.end());
  return static_cast<double>(log_f(x, n));
}

struct RealFlag {
  std::vector<long double> phi;
  int n = 0;
  long long evaluations = 0;
};

namespace detail {

/// Cyclic coordinate descent with golden-section line searches.
template <class Real>
struct CoordinateDescent {
  int n;
  Real gap;
  long long evals = 0;
  long long cap;
  Real radius = 0;  // when positive, search only this close to the current value first

  Real eval(std::vector<Real>& phi, std::size_t k, Real x) {
    ++evals;
    Real keep = phi[k];
    phi[k] = x;
    Real v = log_f(phi, n);
    phi[k] = keep;
    return v;
  }

  // returns how far the coordinate moved
  Real line_search(std::vector<Real>& phi, std::size_t k, Real tol) {
    Real lo = k == 0 ? Real(1) : phi[k - 1] + gap;
    Real hi = k + 1 == phi.size() ? Real(n) : phi[k + 1] - gap;
    if (radius > 0) {
      Real a = std::max(lo, phi[k] - radius), b = std::min(hi, phi[k] + radius);
      Real x = golden(phi, k, a, b, tol);
      if ((x - a > tol || a == lo) && (b - x > tol || b == hi)) return settle(phi, k, x);
    }
    return settle(phi, k, golden(phi, k, lo, hi, tol));
  }

  Real settle(std::vector<Real>& phi, std::size_t k, Real x) {
    using std::abs;
    Real moved = abs(x - phi[k]);
    phi[k] = x;
    return moved;
  }

  Real golden(std::vector<Real>& phi, std::size_t k, Real lo, Real hi, Real tol) {
    using std::sqrt;
    const Real inv_phi = (sqrt(Real(5)) - 1) / 2;
    Real a = lo, b = hi;
    Real c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    Real fc = eval(phi, k, c), fd = eval(phi, k, d);
    while (b - a > tol) {
      if (evals > cap) throw std::runtime_error("minimize_f: iteration cap reached");
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = eval(phi, k, c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = eval(phi, k, d);
      }
    }
    Real x = (a + b) / 2;
    // the endpoints themselves may win when the minimum sits on the boundary
    Real best = x, fbest = eval(phi, k, x);
    for (Real e : {lo, hi}) {
      Real fe = eval(phi, k, e);
      if (fe < fbest) {
        best = e;
        fbest = fe;
      }
    }
    return best;
  }

  void run(std::vector<Real>& phi, Real tol) {
    for (;;) {
      Real moved = 0;
      for (std::size_t k = 0; k < phi.size(); ++k) moved = std::max(moved, line_search(phi, k, tol / 4));
      if (moved < tol / 4) return;
    }
  }
};

}  // namespace detail

/// Minimizer of f on 1 <= φ_1 < ... < φ_p <= n by cyclic golden-section coordinate
/// descent, run in long double and then polished in quad precision.
/// The result is within tol of the true minimizer in every coordinate.
inline RealFlag minimize_f(int p, int n, double tol = 1e-9, const std::vector<long double>* start = nullptr) {
  if (p < 1 || p >= n) throw std::invalid_argument("minimize_f needs 1 <= p < n");
  if (!(tol >= 1e-12)) throw std::invalid_argument("minimize_f needs tol >= 1e-12");
  std::vector<long double> phi(p);
  if (start) {
    if (static_cast<int>(start->size()) != p) throw std::invalid_argument("start has the wrong length");
    phi = *start;
  } else {
    for (int k = 0; k < p; ++k) phi[k] = 1 + (n - 1) * (k + 0.5L) / p;
  }
  constexpr long long cap = 1'000'000;
  detail::CoordinateDescent<long double> coarse{n, 1e-9L, 0, cap};
  // long double resolves the minimum only to about 1e-8
  coarse.run(phi, std::max(static_cast<long double>(tol), 1e-6L));

  std::vector<Quad> fine(phi.begin(), phi.end());
  detail::CoordinateDescent<Quad> polish{n, Quad(1e-9), coarse.evals, cap, Quad(1e-4)};
  polish.run(fine, Quad(std::max(tol / 100, 1e-13)));

  RealFlag out;
  out.n = n;
  out.evaluations = polish.evals;
  for (const auto& x : fine) out.phi.push_back(static_cast<long double>(x));
  return out;
}

// ---------------------------------------------------------------------------
// p = 2

inline double alpha1(int n) { return (n + 1) / 2.0 - std::sqrt(static_cast<double>(n)) / 2; }
inline double alpha2(int n) { return (n + 1) / 2.0 + std::sqrt(static_cast<double>(n)) / 2; }

/// {⌊α⌋-1, ⌊α⌋, ⌈α⌉, ⌈α⌉+1}
inline std::vector<int> candidate_positions(double alpha) {
  int f = static_cast<int>(std::floor(alpha)), c = static_cast<int>(std::ceil(alpha));
  std::vector<int> out{f - 1, f, c, c + 1};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool in_candidate_grid(const Clan& g) {
  Profile pr = profile(g);
  if (pr.phi_plus.size() != 2) throw std::invalid_argument("candidate grid is defined for p = 2");
  auto c1 = candidate_positions(alpha1(g.size())), c2 = candidate_positions(alpha2(g.size()));
  return std::find(c1.begin(), c1.end(), pr.phi_plus[0]) != c1.end() &&
         std::find(c2.begin(), c2.end(), pr.phi_plus[1]) != c2.end();
}

constexpr int kArgmaxCap = 24;

/// Matchless clans of Clan_{p,q} with the most reduced words, by exact counts.
inline std::vector<Clan> argmax_reduced_words(int p, int q, bool force = false) {
  check_cap(p, q, force, kArgmaxCap);
  std::vector<Clan> best;
  BigInt top = -1;
  for (const auto& g : matchless_clans(p, q)) {
    BigInt c = product_formula_count(g);
    if (c > top) {
      top = c;
      best.clear();
    }
    if (c == top) best.push_back(g);
  }
  return best;
}

// ---------------------------------------------------------------------------
// The componentwise order on matchless clans

struct LatticeOps {
  Clan meet, join;
  bool comparable;
};

inline LatticeOps lattice_ops(const Clan& a, const Clan& b) {
  if (!a.is_matchless() || !b.is_matchless()) throw std::invalid_argument("lattice_ops needs matchless clans");
  if (a.size() != b.size() || a.p() != b.p()) throw std::invalid_argument("lattice_ops needs clans of the same (p,q)");
  auto x = profile(a).phi_plus, y = profile(b).phi_plus;
  std::vector<int> lo(x.size()), hi(x.size());
  bool le = true, ge = true;
  for (std::size_t k = 0; k < x.size(); ++k) {
    lo[k] = std::min(x[k], y[k]);
    hi[k] = std::max(x[k], y[k]);
    le = le && x[k] <= y[k];
    ge = ge && x[k] >= y[k];
  }
  return {matchless_from_plus(a.size(), lo), matchless_from_plus(a.size(), hi), le || ge};
}

/// a ⪯ b
inline bool precedes(const Clan& a, const Clan& b) {
  auto x = profile(a).phi_plus, y = profile(b).phi_plus;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] > y[k]) return false;
  return true;
}

inline Clan append_minus(const Clan& g) {
  auto e = g.entries();
  e.push_back(Clan::MINUS);
  return Clan(e);
}

struct MonotonicityReport {
  bool ok = true;
  long long pairs_checked = 0;  // pairs γ' ≺ γ with R(γ') <= R(γ)
  std::string failure;
};

/// γ' ≺ γ and R(γ') <= R(γ) imply R(γ'-) < R(γ-), over all matchless pairs of Clan_{p,q}.
inline MonotonicityReport monotonicity_check(int p, int q) {
  MonotonicityReport rep;
  ReducedWordCounter count;
  auto all = matchless_clans(p, q);
  for (const auto& g : all)
    for (const auto& h : all) {
      if (g == h || !precedes(h, g)) continue;
      if (count(h) > count(g)) continue;
      ++rep.pairs_checked;
      if (!(count(append_minus(h)) < count(append_minus(g)))) {
        rep.ok = false;
        rep.failure = h.str() + " vs " + g.str();
      }
    }
  return rep;
}

struct ContinuityReport {
  bool ok = true;
  long long pairs_checked = 0;  // (γ, δ) maximizer pairs
  std::string failure;
};

/// For every maximizer γ of Clan_{p,q} and δ of Clan_{p,q+1}, φ+(δ) - φ+(γ) ∈ {0,1}^p.
inline ContinuityReport continuity_check(int p, int q) {
  ContinuityReport rep;
  ReducedWordCounter count;
  auto maximizers = [&count](int a, int b) {
    std::vector<Clan> best;
    BigInt top = -1;
    for (const auto& g : matchless_clans(a, b)) {
      BigInt c = count(g);
      if (c > top) {
        top = c;
        best.clear();
      }
      if (c == top) best.push_back(g);
    }
    return best;
  };
  for (const auto& g : maximizers(p, q))
    for (const auto& d : maximizers(p, q + 1)) {
      ++rep.pairs_checked;
      auto x = profile(g).phi_plus, y = profile(d).phi_plus;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (y[k] - x[k] != 0 && y[k] - x[k] != 1) {
          rep.ok = false;
          rep.failure = g.str() + " and " + d.str();
        }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Limit density

inline double limit_density(double t, double theta) {
  if (!(theta > 0 && theta <= 1)) throw std::domain_error("limit_density needs 0 < theta <= 1");
  if (!(t >= 0 && t <= 1)) throw std::domain_error("limit_density needs 0 <= t <= 1");
  if (std::abs(t - 0.5) >= std::sqrt(theta) / (theta + 1)) return 0;
  double arg = (1 - theta) / (1 + theta) / (2 * std::sqrt(t * (1 - t)));
  if (arg > 1) {
    if (arg > 1 + 1e-12) return 0;
    arg = 1;
  }
  return (1 + theta) / (2 * theta) * (1 - 2 / std::numbers::pi * std::asin(arg));
}

}  // namespace clans
