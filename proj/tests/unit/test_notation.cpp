#include <gtest/gtest.h>

#include <random>

#include "calg2/lie.hpp"
#include "calg2/notation.hpp"
#include "support.hpp"

using namespace calg2;

TEST(Salamon, SimpleDifferentials) {
  std::vector<Form> d = parse_salamon("0,0,0,0,12,13");
  ASSERT_EQ(d.size(), 6u);
  EXPECT_EQ(d[4], monomial_form(6, {1, 2}));
  EXPECT_EQ(d[5], monomial_form(6, {1, 3}));
  EXPECT_TRUE(d[0].is_zero());
}

TEST(Salamon, UnsortedPairsCarrySign) {
  std::vector<Form> d = parse_salamon("(0,0,0,0,13+42,14+23,0)");
  EXPECT_EQ(d[4], monomial_form(7, {1, 3}) - monomial_form(7, {2, 4}));
  EXPECT_EQ(parse_form("42", 7, 2), -parse_form("24", 7, 2));
}

TEST(Salamon, CoefficientDistributesOverGroup) {
  std::vector<Form> d = parse_salamon("0,0,12,0,13+24,14,15+23+1/2*(26+34)");
  Form expected = parse_form("15+23", 7, 2) + Rational(1, 2) * parse_form("26+34", 7, 2);
  EXPECT_EQ(d[6], expected);
  std::vector<Form> e = parse_salamon("0,0,0,12,23,-13,15+26+16-2*34");
  EXPECT_EQ(*e[6].find(MultiIndex::from_sequence({3, 4}).second), Rational(-2));
}

TEST(Salamon, WhitespaceAndTypographicMinus) {
  EXPECT_EQ(parse_salamon("0,0,0,12,13,14 \xE2\x88\x92 23"), parse_salamon("0,0,0,12,13,14-23"));
}

TEST(Salamon, Errors) {
  EXPECT_THROW(parse_salamon("0,0,12", 4), ParseError);
  EXPECT_THROW(parse_salamon("0,0,18"), ParseError);
  EXPECT_THROW(parse_salamon("0,0,11"), ParseError);
  EXPECT_THROW(parse_salamon("0,0,1/0*12"), ParseError);
  EXPECT_THROW(parse_salamon("0,0,12+"), ParseError);
  EXPECT_THROW(parse_salamon("0,0,123"), ParseError);
}

TEST(Forms, ParseSymplecticAndThreeForms) {
  Form omega = parse_form("14+26+35", 6, 2);
  EXPECT_EQ(omega, monomial_form(6, {1, 4}) + monomial_form(6, {2, 6}) + monomial_form(6, {3, 5}));
  Form psi = parse_form("123+145+246-356", 6, 3);
  EXPECT_EQ(psi.size(), 4u);
  EXPECT_EQ(*psi.find(MultiIndex::from_sequence({3, 5, 6}).second), Rational(-1));
  EXPECT_TRUE(parse_form("0", 6, 2).is_zero());
}

TEST(Forms, RadicalCoefficients) {
  RadicalForm a = parse_radical_form("s3*(2*1-7-6-5)", 7, 1);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(*a.find(MultiIndex::from_sequence({1}).second), Radical(2) * Radical::sqrt_of(3));
  EXPECT_EQ(print_form(a), "2*s3*1-s3*5-s3*6-s3*7");
  EXPECT_THROW(parse_form("s3*1", 7, 1), ParseError);
}

TEST(Printing, CanonicalText) {
  EXPECT_EQ(print_form(monomial_form(6, {1, 3}) - monomial_form(6, {2, 4})), "13-24");
  EXPECT_EQ(print_form(Form(6, 2)), "0");
  EXPECT_EQ(print_form(parse_form("1/2*(26+34)-2*15", 7, 2)), "-2*15+1/2*26+1/2*34");
  EXPECT_EQ(print_salamon(parse_salamon("0,0,0,0,13+42,14+23,0")), "0,0,0,0,13-24,14+23,0");
}

TEST(Printing, ParseOfPrintIsIdentity) {
  std::mt19937 rng(41);
  for (int t = 0; t < 300; ++t) {
    int k = static_cast<int>(rng() % 8);
    Form a = calg2::testing::random_form(rng, 7, k);
    EXPECT_EQ(parse_form(print_form(a), 7, k), a);
  }
}

TEST(Printing, NormalizationIsIdempotent) {
  const char* raw[] = {"0,0,0,0,13+42,14+23,0", "0,0,12,0,13+24,14,15+23+1/2*(26+34)", "0,0,0,12,23,-13,15+26+16-2*34",
                       "(0,0,12,13,23,-14-25,16-35+25)"};
  for (const char* s : raw) {
    std::string once = print_salamon(parse_salamon(s));
    EXPECT_EQ(print_salamon(parse_salamon(once)), once);
  }
}

TEST(Coframe, SplitsOnSemicolonsAndNewlines) {
  auto a = parse_coframe("2; 4; 1; 3; 5; 6; 7", 7);
  auto b = parse_coframe("2\n4\n1\n3\n5\n6\n7\n", 7);
  ASSERT_EQ(a.size(), 7u);
  EXPECT_EQ(a, b);
  EXPECT_THROW(parse_coframe("1;2;3", 7), ParseError);
}
