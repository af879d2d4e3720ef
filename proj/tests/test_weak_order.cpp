#include "clans/weak_order.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace clans;

namespace {

std::vector<Word> words_of(std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.push_back(parse_word(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clan> all_clans(int max_n) {
  std::vector<Clan> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p)
      for (auto& g : enumerate_clans(p, n - p)) out.push_back(g);
  return out;
}

}  // namespace

TEST(Covers, DownExamples) {
  auto d = down_covers(parse_clan("- + -"));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].label, 1);
  EXPECT_EQ(d[0].clan, parse_clan("2 1 -"));
  EXPECT_EQ(d[1].label, 2);
  EXPECT_EQ(d[1].clan, parse_clan("- 3 2"));
  EXPECT_TRUE(down_covers(minimal_clan(1, 2)).empty());
  auto e = down_covers(parse_clan("- - +"));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].label, 2);
}

TEST(Covers, UpExamples) {
  auto u = up_covers(minimal_clan(1, 2));
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[0].label, 1);
  EXPECT_EQ(u[0].clan, parse_clan("- 3 2"));
  EXPECT_EQ(u[1].label, 2);
  EXPECT_EQ(u[1].clan, parse_clan("2 1 -"));
  auto v = up_covers(parse_clan("2 1 -"));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].clan, parse_clan("+ - -"));
  EXPECT_EQ(v[1].clan, parse_clan("- + -"));
  EXPECT_TRUE(up_covers(parse_clan("+-+-")).empty());
}

TEST(Covers, UpDownDuality) {
  for (const auto& g : all_clans(6)) {
    for (const auto& c : down_covers(g)) {
      auto ups = up_covers(c.clan);
      bool found = std::any_of(ups.begin(), ups.end(), [&](const Cover& u) { return u.label == c.label && u.clan == g; });
      EXPECT_TRUE(found) << g.str();
    }
    for (const auto& c : up_covers(g)) {
      auto downs = down_covers(c.clan);
      bool found = std::any_of(downs.begin(), downs.end(), [&](const Cover& d) { return d.label == c.label && d.clan == g; });
      EXPECT_TRUE(found) << g.str();
    }
  }
}

TEST(ReducedWords, SmallExamples) {
  EXPECT_EQ(reduced_words(parse_clan("-+-")), words_of({"12", "21"}));
  EXPECT_EQ(reduced_words(parse_clan("+--+")), words_of({"2321", "3231", "3213", "1231", "1213", "2123"}));
  EXPECT_EQ(reduced_words(minimal_clan(3, 2)), words_of({"e"}));
  EXPECT_EQ(count_reduced_words(parse_clan("-+-")), 2);
  EXPECT_EQ(count_reduced_words(parse_clan("+--+")), 6);
  EXPECT_EQ(count_reduced_words(parse_clan("+-+-")), 8);
}

TEST(ReducedWords, MatchLetterByLetterSearch) {
  for (const auto& g : all_clans(5)) {
    auto w = reduced_words(g);
    EXPECT_EQ(std::set<Word>(w.begin(), w.end()), oracle::reduced_words_brute(g)) << g.str();
  }
}

TEST(ReducedWords, CountsAndCoxeterClosure) {
  for (const auto& g : all_clans(6)) {
    auto w = reduced_words(g);
    EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
    EXPECT_EQ(BigInt(w.size()), count_reduced_words(g)) << g.str();
    if (g.size() <= 5) {
      EXPECT_EQ(BigInt(w.size()), count_chains_by_walk(g));
    }
    std::set<Word> ws(w.begin(), w.end());
    for (const auto& a : w) {
      EXPECT_TRUE(is_reduced_word(g, a));
      EXPECT_TRUE(is_reduced_for(g.size(), a)) << g.str() << " " << format_word(a);
      for (std::size_t k = 0; k + 1 < a.size(); ++k)
        if (std::abs(a[k] - a[k + 1]) > 1) {
          Word b = a;
          std::swap(b[k], b[k + 1]);
          EXPECT_TRUE(ws.count(b));
        }
      for (std::size_t k = 0; k + 2 < a.size(); ++k)
        if (a[k] == a[k + 2] && std::abs(a[k] - a[k + 1]) == 1) {
          Word b = a;
          b[k] = b[k + 2] = a[k + 1];
          b[k + 1] = a[k];
          EXPECT_TRUE(ws.count(b));
        }
    }
  }
}

TEST(Poset, Sizes) {
  Poset a = build_poset(1, 2);
  EXPECT_EQ(a.elements.size(), 6u);
  EXPECT_EQ(a.covers.size(), 6u);
  Poset b = build_poset(1, 1);
  EXPECT_EQ(b.elements.size(), 3u);
  EXPECT_EQ(b.covers.size(), 2u);
  EXPECT_EQ(b.elements[0], parse_clan("2 1"));
  Poset c = build_poset(0, 1);
  EXPECT_EQ(c.elements.size(), 1u);
  EXPECT_TRUE(c.covers.empty());
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) EXPECT_EQ(build_poset(p, n - p).elements.size(), enumerate_clans(p, n - p).size());
}

TEST(Poset, GradedExtremaAndChains) {
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      Poset P = build_poset(p, q);
      std::vector<int> indeg(P.elements.size(), 0), outdeg(P.elements.size(), 0);
      for (auto& [lo, hi, lab] : P.covers) {
        EXPECT_EQ(P.rank[hi], P.rank[lo] + 1);
        ++indeg[hi];
        ++outdeg[lo];
      }
      for (std::size_t k = 0; k < P.elements.size(); ++k) {
        EXPECT_EQ(indeg[k] == 0, P.elements[k] == minimal_clan(p, q));
        EXPECT_EQ(outdeg[k] == 0, P.elements[k].is_matchless());
      }
      EXPECT_EQ(count_maximal_chains(P), count_maximal_chains(p, q));
    }
  EXPECT_EQ(count_maximal_chains(1, 2), 4);
  EXPECT_EQ(count_maximal_chains(2, 2), 32);
  EXPECT_EQ(count_maximal_chains(0, 3), 1);
}

TEST(Poset, SizeCap) {
  EXPECT_THROW(build_poset(6, 5), size_cap_error);
  EXPECT_THROW(count_maximal_chains(6, 5), size_cap_error);
  EXPECT_THROW(build_poset(0, 0), std::invalid_argument);
}

TEST(Poset, DotAndJson) {
  Poset P = build_poset(1, 1);
  std::string dot = poset_to_dot(P);
  EXPECT_NE(dot.find("\"2 1\" -> \"+ -\" [label=\"s1\"];"), std::string::npos);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  Poset Q = build_poset(2, 2);
  Poset R = poset_from_json(nlohmann::json::parse(poset_to_json(Q).dump()));
  EXPECT_EQ(R.elements, Q.elements);
  EXPECT_EQ(R.covers, Q.covers);
  EXPECT_EQ(R.rank, Q.rank);
}
