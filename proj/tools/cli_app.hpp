#pragma once

#include "clans/atoms.hpp"
#include "clans/clan.hpp"
#include "clans/counting.hpp"
#include "clans/maximizer.hpp"
#include "clans/schubert.hpp"
#include "clans/symfun.hpp"
#include "clans/verify.hpp"
#include "clans/weak_order.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace clans::cli {

inline const char* kFooter = R"(Clans:
  one token per position: '+', '-' or a partner index (1-based).
  Tokens may be separated by spaces or commas; without separators every
  character is a token, so partner indices must then be single digits.
  Example: "1 + - 1", "1,+,-,1", "1+-1". A Unicode minus is accepted.
  Arguments that start with '+' or '-' and are not option names are read as
  clans; write "- -" rather than "--" for the clan of two minus signs.

Words:
  comma-separated letters ("1,2,1"), a digit string when every letter is
  at most 9 ("121"), and "e" or "" for the empty word.

Permutations (--perm): one-line notation, "3241" or "3,2,4,1".

JSON schemas:
  clan        {"n": int, "entries": ["+" | "-" | int, ...]}
  poset       {"p": int, "q": int, "elements": [clan string, ...],
               "covers": [[lower index, upper index, label], ...]}
  shape       {"n": int, "arcs": [[i, j, marked, label or null], ...]}
  polynomial  [[exponent vector, coefficient string], ...]
  partition   [part, ...]; strict partitions {"parts": [...], "strict": true}

Exit status: 0 success, 1 verification failure, 2 usage error.)";

namespace detail {

inline std::string fixed(long double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << static_cast<double>(x);
  return os.str();
}

inline std::string brace_list(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "}";
}

/// Tokens starting with '+' or '-' that are not option names are hidden from
/// the option parser and restored by `Args::get`.
struct Args {
  std::vector<std::string> parser_args;
  std::vector<std::string> hidden;

  explicit Args(const std::vector<std::string>& in) {
    bool rest = false;
    for (const auto& a : in) {
      if (rest || !looks_like_clan(a)) {
        if (a == "--") rest = true;
        parser_args.push_back(a);
        continue;
      }
      parser_args.push_back("@arg" + std::to_string(hidden.size()));
      hidden.push_back(a);
    }
  }

  static bool looks_like_clan(const std::string& a) {
    if (a.empty() || a == "-" || a == "--") return false;
    bool minus_start = a[0] == '-' || a.rfind("\xE2\x88\x92", 0) == 0;
    if (!minus_start && a[0] != '+') return false;
    if (a.size() >= 2 && a[0] == '-' && std::isalpha(static_cast<unsigned char>(a[1]))) return false;
    if (a.size() >= 3 && a[0] == '-' && a[1] == '-' && std::isalpha(static_cast<unsigned char>(a[2]))) return false;
    return true;
  }

  std::string get(const std::string& s) const {
    if (s.rfind("@arg", 0) == 0) {
      std::size_t k = std::stoul(s.substr(4));
      if (k < hidden.size()) return hidden[k];
    }
    return s;
  }
};

}  // namespace detail

/// Runs one command; args exclude the program name. Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Args A(args);
  CLI::App app{"Clans, their weak order, atoms, shapes, Schubert polynomials and reduced word counts", "clans"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough(false);

  bool json = false, dot = false, force = false, perm = false, table = false, wy = false;
  std::string clan_text, method = "words";
  int p = 0, q = 0, n = 0, vars = 0, max_n = -1, grid = 0;
  double tol = 1e-9, t = 0.5, theta = 1.0;
  std::string suite;
  VerifyBounds bounds;

  auto* words = app.add_subcommand("words", "reduced words of a clan, one per line");
  words->add_option("clan", clan_text, "clan")->required();
  words->add_flag("--json", json, "JSON output");

  auto* count = app.add_subcommand("count", "number of reduced words, with the product formula for matchless clans");
  count->add_option("clan", clan_text, "clan")->required();
  count->add_flag("--json", json, "JSON output");

  auto* atoms_cmd = app.add_subcommand("atoms", "atoms of a clan with their labelled shapes");
  atoms_cmd->add_option("clan", clan_text, "clan")->required();
  atoms_cmd->add_flag("--json", json, "JSON output");

  auto* shapes = app.add_subcommand("shapes", "unlabelled shapes of a clan's atoms and their move poset");
  shapes->add_option("clan", clan_text, "clan")->required();
  shapes->add_flag("--json", json, "JSON output");

  auto* poset = app.add_subcommand("poset", "weak order on Clan_{p,q}");
  poset->add_option("p", p, "number of plus signs")->required();
  poset->add_option("q", q, "number of minus signs")->required();
  poset->add_flag("--dot", dot, "Graphviz output");
  poset->add_flag("--json", json, "JSON output");
  poset->add_flag("--force", force, "lift the size cap p+q <= 10");

  auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of a clan (or of a permutation with --perm)");
  schubert->add_option("object", clan_text, "clan or permutation")->required();
  schubert->add_flag("--perm", perm, "read the argument as a permutation");
  schubert->add_flag("--wy", wy, "compute through the Wyser-Yong recurrence");
  schubert->add_flag("--json", json, "JSON output");

  auto* stanley = app.add_subcommand("stanley", "Stanley symmetric function truncated to x1..xN");
  stanley->add_option("clan", clan_text, "clan")->required();
  stanley->add_option("--vars", vars, "number of variables N")->required()->check(CLI::PositiveNumber);
  stanley->add_option("--method", method, "words or isobaric")->check(CLI::IsMember({"words", "isobaric"}));
  stanley->add_flag("--json", json, "JSON output");

  auto* maxchains = app.add_subcommand("maxchains", "maximal chains of Clan_{p,q}: enumeration against the closed formula");
  maxchains->add_option("p", p, "number of plus signs");
  maxchains->add_option("q", q, "number of minus signs");
  maxchains->add_flag("--table", table, "table over all p+q <= max-n");
  maxchains->add_option("--max-n", max_n, "largest p+q in the table (default 6)");
  maxchains->add_flag("--force", force, "lift the size cap p+q <= 10");
  maxchains->add_flag("--json", json, "JSON output");

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "mt, schubert, stanley, chains, identity, shapes or maximizer")
      ->required()
      ->check(CLI::IsMember(verify_suites()));
  verify->add_option("--max-n", bounds.max_n, "size bound (suite specific default)");
  verify->add_option("--p", bounds.p, "p for the identity suite");
  verify->add_option("--q", bounds.q, "q for the identity suite");
  verify->add_option("--vars", bounds.vars, "variables for the identity suite");

  auto* maximize = app.add_subcommand("maximize", "minimizer of f, the rounded grid and the exact argmax");
  maximize->add_option("p", p, "number of coordinates")->required();
  maximize->add_option("n", n, "p+q")->required();
  maximize->add_option("--tol", tol, "coordinate tolerance (at least 1e-12)");
  maximize->add_flag("--json", json, "JSON output");

  auto* density = app.add_subcommand("density", "limit density of plus signs");
  density->add_option("t", t, "position in [0,1]");
  density->add_option("theta,--theta", theta, "aspect ratio in (0,1]");
  density->add_option("--grid", grid, "print the density at k/grid for k = 0..grid");
  density->add_flag("--json", json, "JSON output");

  if (!A.parser_args.empty() && A.parser_args.front().rfind("-", 0) != 0 &&
      !app.get_subcommand_no_throw(A.parser_args.front())) {
    err << "error: unknown verb '" << A.get(A.parser_args.front()) << "'\n" << "run with --help for usage\n";
    return 2;
  }
  try {
    std::vector<std::string> rev(A.parser_args.rbegin(), A.parser_args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << A.get(e.what()) << "\n";
    return 2;
  }
  clan_text = A.get(clan_text);

  try {
    if (*words) {
      Clan g = parse_clan(clan_text);
      auto ws = reduced_words(g);
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& w : ws) j.push_back(format_word(w));
        out << nlohmann::json{{"clan", g.str()}, {"words", j}}.dump() << "\n";
      } else {
        for (const auto& w : ws) out << format_word(w) << "\n";
      }
      return 0;
    }

    if (*count) {
      Clan g = parse_clan(clan_text);
      BigInt e = count_reduced_words(g);
      if (json) {
        nlohmann::json j{{"clan", g.str()}, {"enumerated", e.str()}};
        if (g.is_matchless()) j["formula"] = product_formula_count(g).str();
        out << j.dump() << "\n";
      } else if (g.is_matchless()) {
        BigInt f = product_formula_count(g);
        out << "enumerated=" << e << " formula=" << f << (e == f ? " OK" : " MISMATCH") << "\n";
        if (e != f) return 1;
      } else {
        out << "enumerated=" << e << "\n";
      }
      return 0;
    }

    if (*atoms_cmd) {
      Clan g = parse_clan(clan_text);
      auto at = atoms(g);
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& w : at) j.push_back({{"atom", format_perm(w)}, {"lsh", to_json(lsh(w, g.p(), g.q()))}});
        out << nlohmann::json{{"clan", g.str()}, {"atoms", j}}.dump() << "\n";
      } else {
        for (const auto& w : at) out << format_perm(w) << "  " << format_arcs(lsh(w, g.p(), g.q()).arcs) << "\n";
      }
      return 0;
    }

    if (*shapes) {
      Clan g = parse_clan(clan_text);
      auto P = shape_poset(g);
      UnlabelledShape top = sigma_max(g);
      int top_index = -1;
      for (std::size_t k = 0; k < P.shapes.size(); ++k)
        if (P.shapes[k] == top) top_index = static_cast<int>(k);
      if (json) {
        nlohmann::json sh = nlohmann::json::array(), cov = nlohmann::json::array();
        for (const auto& s : P.shapes) {
          nlohmann::json js = to_json(s);
          js["atom"] = format_perm(shape_atom(s));
          sh.push_back(js);
        }
        for (auto& [x, y] : P.covers) cov.push_back({x, y});
        out << nlohmann::json{{"clan", g.str()}, {"shapes", sh}, {"covers", cov}, {"sigma_max", top_index}}.dump()
            << "\n";
      } else {
        for (std::size_t k = 0; k < P.shapes.size(); ++k) {
          const auto& s = P.shapes[k];
          out << "[" << k << "] " << format_arcs(s.arcs) << "  atom " << format_perm(shape_atom(s)) << "\n";
          out << render_shape(standard_labelling(s).arcs, g.size(), &g) << "\n";
        }
        out << "moves (Hasse diagram, toward sigma_max = [" << top_index << "]):\n";
        for (auto& [x, y] : P.covers) out << "  [" << x << "] -> [" << y << "]\n";
      }
      return 0;
    }

    if (*poset) {
      Poset P = build_poset(p, q, force);
      if (dot) {
        out << poset_to_dot(P);
      } else if (json) {
        out << poset_to_json(P).dump() << "\n";
      } else {
        int r = -1;
        for (std::size_t k = 0; k < P.elements.size(); ++k) {
          if (P.rank[k] != r) {
            r = P.rank[k];
            out << (k ? "\n" : "") << "rank " << r << ":";
          }
          out << "  " << P.elements[k].compact();
        }
        out << "\n";
        for (auto& [lo, hi, lab] : P.covers)
          out << P.elements[lo].str() << " -s" << lab << "-> " << P.elements[hi].str() << "\n";
      }
      return 0;
    }

    if (*schubert) {
      Polynomial f;
      if (perm) {
        f = schubert_perm(parse_perm(clan_text));
      } else {
        Clan g = parse_clan(clan_text);
        f = wy ? wyser_yong(g) : schubert_clan(g);
      }
      out << (json ? to_json(f).dump() : f.str()) << "\n";
      return 0;
    }

    if (*stanley) {
      Clan g = parse_clan(clan_text);
      Polynomial f = method == "words" ? stanley_truncated(g, vars) : stanley_truncated_isobaric(g, vars);
      out << (json ? to_json(f).dump() : f.str()) << "\n";
      return 0;
    }

    if (*maxchains) {
      if (table || maxchains->count("p") == 0) {
        const int top = max_n < 0 ? 6 : max_n;
        std::vector<ChainTableRow> rows;
        for (int m = 1; m <= top; ++m)
          for (int a = m; a >= 0; --a) {
            if (a < m - a) continue;
            rows.push_back({a, m - a, count_maximal_chains(a, m - a, force), maximal_chain_formula(a, m - a)});
          }
        bool all = std::all_of(rows.begin(), rows.end(), [](const ChainTableRow& r) { return r.match(); });
        if (json) {
          nlohmann::json j = nlohmann::json::array();
          for (const auto& r : rows)
            j.push_back({{"p", r.p}, {"q", r.q}, {"enumerated", r.enumerated.str()}, {"formula", r.formula.str()}});
          out << j.dump() << "\n";
        } else {
          out << format_chain_table(rows);
        }
        return all ? 0 : 1;
      }
      if (maxchains->count("q") == 0) throw CLI::ValidationError("maxchains needs both p and q");
      BigInt e = count_maximal_chains(p, q, force), f = maximal_chain_formula(p, q);
      if (json)
        out << nlohmann::json{{"p", p}, {"q", q}, {"enumerated", e.str()}, {"formula", f.str()}}.dump() << "\n";
      else
        out << "enumerated=" << e << " formula=" << f << (e == f ? " OK" : " MISMATCH") << "\n";
      return e == f ? 0 : 1;
    }

    if (*verify) {
      VerifyReport rep = run_verify(suite, bounds);
      for (const auto& line : rep.lines) out << line << "\n";
      return rep.ok ? 0 : 1;
    }

    if (*maximize) {
      RealFlag r = minimize_f(p, n, tol);
      std::vector<std::vector<int>> rounded;
      for (long double x : r.phi) {
        std::vector<int> c{static_cast<int>(std::floor(x)), static_cast<int>(std::ceil(x))};
        c.erase(std::unique(c.begin(), c.end()), c.end());
        rounded.push_back(c);
      }
      std::vector<Clan> best;
      const bool feasible = n <= kArgmaxCap;
      if (feasible) best = argmax_reduced_words(p, n - p);
      if (json) {
        nlohmann::json phi = nlohmann::json::array(), b = nlohmann::json::array();
        for (long double x : r.phi) phi.push_back(static_cast<double>(x));
        for (const auto& g : best) b.push_back({{"clan", g.str()}, {"count", product_formula_count(g).str()}});
        nlohmann::json j{{"p", p}, {"n", n}, {"phi", phi}, {"grid", rounded}};
        if (feasible) j["argmax"] = b;
        out << j.dump() << "\n";
        return 0;
      }
      out << "phi* =";
      for (long double x : r.phi) out << " " << detail::fixed(x);
      out << "\n";
      for (std::size_t k = 0; k < rounded.size(); ++k)
        out << "phi" << k + 1 << " rounds to " << detail::brace_list(rounded[k]) << "\n";
      if (p == 2) {
        out << "alpha = " << detail::fixed(alpha1(n)) << " " << detail::fixed(alpha2(n)) << "\n";
        out << "candidates: phi1 in " << detail::brace_list(candidate_positions(alpha1(n))) << ", phi2 in "
            << detail::brace_list(candidate_positions(alpha2(n))) << "\n";
      }
      if (feasible) {
        out << "argmax over matchless (" << p << "," << n - p << ")-clans:\n";
        for (const auto& g : best) {
          out << "  " << g.compact() << "  #R=" << product_formula_count(g) << "  phi+="
              << detail::brace_list(profile(g).phi_plus);
          if (p == 2) out << (in_candidate_grid(g) ? "  in grid" : "  OUTSIDE grid");
          out << "\n";
        }
      }
      return 0;
    }

    if (*density) {
      auto fmt = [](double x) {
        std::ostringstream os;
        os << std::setprecision(17) << x;
        return os.str();
      };
      if (grid > 0) {
        nlohmann::json j = nlohmann::json::array();
        for (int k = 0; k <= grid; ++k) {
          double s = static_cast<double>(k) / grid, v = limit_density(s, theta);
          if (json) j.push_back({s, v});
          else out << fmt(s) << " " << fmt(v) << "\n";
        }
        if (json) out << j.dump() << "\n";
        return 0;
      }
      double v = limit_density(t, theta);
      if (json) out << nlohmann::json{{"t", t}, {"theta", theta}, {"density", v}}.dump() << "\n";
      else out << fmt(v) << "\n";
      return 0;
    }
  } catch (const size_cap_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace clans::cli
