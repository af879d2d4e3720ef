#include "clans/counting.hpp"

#include <gtest/gtest.h>

using namespace clans;

TEST(ProductFormula, Examples) {
  EXPECT_EQ(product_formula_count(parse_clan("-+-")), 2);
  EXPECT_EQ(product_formula_count(parse_clan("+--+")), 6);
  EXPECT_EQ(product_formula_count(parse_clan("+-+-")), 8);
  EXPECT_EQ(product_formula_count(parse_clan("+++")), 1);
  EXPECT_THROW(product_formula_count(parse_clan("2 1 +")), std::invalid_argument);
  EXPECT_THROW(hook_form_count(parse_clan("2 1")), std::invalid_argument);
}

TEST(ProductFormula, AgreesWithHookFormAndEnumeration) {
  ReducedWordCounter counter;
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p)
      for (const auto& g : matchless_clans(p, n - p)) {
        BigInt c = product_formula_count(g);
        EXPECT_EQ(c, hook_form_count(g)) << g.str();
        if (n <= 7) {
          EXPECT_EQ(c, counter(g)) << g.str();
        }
      }
}

TEST(Involutions, Basics) {
  EXPECT_EQ(involution_star(identity_perm(3), 1), parse_perm("213"));
  EXPECT_EQ(involution_star(parse_perm("213"), 2), parse_perm("321"));
  EXPECT_THROW(involution_star(parse_perm("213"), 3), std::out_of_range);
  EXPECT_EQ(w_pq(1, 2), parse_perm("321"));
  EXPECT_EQ(w_pq(2, 2), parse_perm("4321"));
  EXPECT_EQ(kappa(identity_perm(4)), 0);
  EXPECT_EQ(kappa(parse_perm("4321")), 2);
  EXPECT_TRUE(in_Ipq(parse_perm("4321"), 2, 2));
  EXPECT_FALSE(in_Ipq(parse_perm("4321"), 1, 3));
  EXPECT_FALSE(in_Ipq(parse_perm("231"), 1, 2));
  EXPECT_EQ(involution_length(parse_perm("321")), 2);
}

TEST(Involutions, ReducedWords) {
  EXPECT_EQ(involution_words(parse_perm("321")), (std::vector<Word>{parse_word("12"), parse_word("21")}));
  EXPECT_EQ(involution_words(identity_perm(3)), (std::vector<Word>{Word{}}));
  EXPECT_EQ(involution_words(parse_perm("4321")).size(), 8u);
  EXPECT_THROW(involution_words(parse_perm("231")), std::invalid_argument);
  for (const auto& z : involutions_upto(6, 3)) {
    for (const auto& a : involution_words(z)) {
      ASSERT_EQ(static_cast<int>(a.size()), involution_length(z));
      Permutation y = identity_perm(6);
      for (int i : a) {
        Permutation next = involution_star(y, i);
        EXPECT_EQ(involution_length(next), involution_length(y) + 1);
        y = next;
      }
      EXPECT_EQ(y, z);
    }
  }
}

TEST(Involutions, TopOfIpqAndSquarefreeCount) {
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      EXPECT_EQ(maximal_in_Ipq(p, q), (std::vector<Permutation>{w_pq(p, q)})) << p << "," << q;
      const int hi = std::max(p, q), lo = std::min(p, q);
      BigInt expect = (BigInt(1) << (p * q - lo)) * count_shifted_SYT(staircase(hi, lo));
      EXPECT_EQ(BigInt(involution_words(w_pq(p, q)).size()), expect) << p << "," << q;
    }
}

TEST(Iota, OrderReversingOntoIpq) {
  for (int n = 1; n <= 5; ++n)
    for (int p = 0; p <= n; ++p) {
      auto r = iota_check(p, n - p);
      EXPECT_TRUE(r.order_reversing) << p << "," << n - p;
      EXPECT_TRUE(r.image_is_Ipq) << p << "," << n - p;
      EXPECT_TRUE(r.fiber_sizes_ok) << p << "," << n - p;
    }
}

TEST(MaximalChains, Examples) {
  EXPECT_EQ(maximal_chain_formula(2, 1), 4);
  EXPECT_EQ(maximal_chain_formula(2, 2), 32);
  EXPECT_EQ(maximal_chain_formula(3, 0), 1);
  EXPECT_EQ(maximal_chain_formula(1, 3), maximal_chain_formula(3, 1));
  EXPECT_THROW(maximal_chain_formula(-1, 2), std::invalid_argument);
}

TEST(MaximalChains, FormulaMatchesEnumeration) {
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      BigInt f = maximal_chain_formula(p, q);
      EXPECT_EQ(f, maximal_chain_hook_form(p, q));
      if (n <= 7) {
        EXPECT_EQ(count_maximal_chains(p, q, true), f) << p << "," << q;
      }
    }
}

TEST(ChainCorrespondence, Examples) {
  auto a = chain_correspondence_check(1, 2);
  EXPECT_TRUE(a.ok) << a.failure;
  EXPECT_EQ(a.clan_maximal_chains, 4);
  EXPECT_EQ(a.involution_words_top, 2);
  auto b = chain_correspondence_check(2, 2);
  EXPECT_TRUE(b.ok) << b.failure;
  EXPECT_EQ(b.clan_maximal_chains, 32);
  EXPECT_EQ(b.involution_words_top, 8);
  auto c = chain_correspondence_check(1, 1);
  EXPECT_TRUE(c.ok) << c.failure;
  EXPECT_EQ(c.clan_maximal_chains, 2);
  EXPECT_THROW(chain_correspondence_check(5, 4), size_cap_error);
}

TEST(ChainCorrespondence, HoldsUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) {
      auto r = chain_correspondence_check(p, n - p);
      EXPECT_TRUE(r.ok) << p << "," << n - p << ": " << r.failure;
    }
}

TEST(ChainTable, Format) {
  std::vector<ChainTableRow> rows{{1, 2, 4, 4}, {2, 2, 32, 32}, {2, 2, 31, 32}};
  EXPECT_EQ(format_chain_table(rows),
            "p  q  enumerated  formula  match\n"
            "1  2           4        4    yes\n"
            "2  2          32       32    yes\n"
            "2  2          31       32     NO\n");
}
