#include <gtest/gtest.h>

#include "generators.hpp"
#include "reeskit/groebner.hpp"
#include "reeskit/parse.hpp"

using namespace reeskit;
using QQ = Polynomial<Rationals>;

namespace {

RingPtr<Rationals> qring(std::size_t n, MonomialOrder order = MonomialOrder::revlex()) {
  return Ring<Rationals>::generic(Rationals{}, gen::names(n), order);
}

std::vector<QQ> parse_all(const RingPtr<Rationals>& r, std::initializer_list<const char*> texts) {
  std::vector<QQ> out;
  for (auto t : texts) out.push_back(parse_poly(r, t));
  return out;
}

}  // namespace

TEST(Groebner, TwistedCubic) {
  auto r = qring(4);
  auto gb = groebner_basis(parse_all(r, {"x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"}));
  EXPECT_EQ(gb.size(), 3u);
  EXPECT_TRUE(is_groebner(gb).is_groebner);
}

TEST(Groebner, LexNeedsMore) {
  auto r = qring(3, MonomialOrder::lex());
  auto gens = parse_all(r, {"x1^2 + x2 + x3 - 1", "x1 + x2^2 + x3 - 1", "x1 + x2 + x3^2 - 1"});
  auto result = buchberger(gens);
  EXPECT_EQ(result.report.status, GbStatus::Complete);
  EXPECT_TRUE(is_groebner(result.basis).is_groebner);
  EXPECT_EQ(result.report.pairs_generated, result.report.pairs_skipped + result.report.pairs_processed);
  // last element is univariate in x3
  EXPECT_EQ(result.basis.back().support(), std::vector<std::size_t>{2});
}

TEST(Groebner, UnitIdeal) {
  auto r = qring(2);
  auto gb = groebner_basis(parse_all(r, {"x1*x2 - 1", "x1"}));
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0].to_string(), "1");
}

TEST(Groebner, NormalFormAndSPoly) {
  auto r = qring(2);
  auto f = parse_poly(r, "x1^2 - x2");
  auto g = parse_poly(r, "x1*x2 - 1");
  EXPECT_EQ(s_polynomial(f, g), parse_poly(r, "x2^2 - x1").monic());
  EXPECT_EQ(normal_form(parse_poly(r, "x1^3"), std::vector<QQ>{f}), parse_poly(r, "x1*x2"));
}

TEST(Groebner, GuardAborts) {
  auto r = qring(3, MonomialOrder::lex());
  auto gens = parse_all(r, {"x1^3 - x2*x3", "x2^3 - x1*x3^2", "x3^3 - x1^2*x2"});
  GbOptions opts;
  opts.max_pairs = 2;
  auto result = buchberger(gens, opts);
  EXPECT_EQ(result.report.status, GbStatus::Aborted);
  EXPECT_FALSE(result.report.diagnostic.empty());
  EXPECT_THROW(groebner_basis(gens, opts), GuardExceeded);
  GbOptions deg;
  deg.max_degree = 3;
  EXPECT_THROW(groebner_basis(gens, deg), GuardExceeded);
}

TEST(Groebner, CriteriaDoNotChangeResult) {
  gen::Rng rng(5);
  auto r = Ring<PrimeField>::generic(PrimeField(32003), gen::names(3));
  for (int i = 0; i < 30; ++i) {
    std::vector<Polynomial<PrimeField>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(gen::nonzero_polynomial(rng, r, 3, 2));
    GbOptions plain;
    plain.use_criteria = false;
    auto a = groebner_basis(gens);
    auto b = groebner_basis(gens, plain);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t j = 0; j < a.size(); ++j) ASSERT_EQ(a[j], b[j]);
  }
}

TEST(Groebner, PrimeFieldReport) {
  auto r = Ring<PrimeField>::generic(PrimeField(101), gen::names(3));
  std::vector<Polynomial<PrimeField>> gens{parse_poly(r, "x1*x2 - x3^2"), parse_poly(r, "x2^2 - x1*x3")};
  auto res = buchberger(gens);
  EXPECT_EQ(res.report.status, GbStatus::Complete);
  EXPECT_EQ(res.report.basis_size, res.basis.size());
  EXPECT_GE(res.report.max_degree, 2u);
}
