#include <gtest/gtest.h>

#include "generators.hpp"
#include "reeskit/ideal.hpp"
#include "reeskit/parse.hpp"

using namespace reeskit;
using QQ = Polynomial<Rationals>;
using IdealQ = Ideal<Rationals>;

namespace {

RingPtr<Rationals> qring(std::size_t n) { return Ring<Rationals>::generic(Rationals{}, gen::names(n)); }

IdealQ ideal(const RingPtr<Rationals>& r, std::initializer_list<const char*> texts) {
  std::vector<QQ> out;
  for (auto t : texts) out.push_back(parse_poly(r, t));
  return IdealQ(r, out);
}

}  // namespace

TEST(Ideal, KernelOfCusp) {
  auto src = Ring<Rationals>::generic(Rationals{}, {"a", "b"});
  auto tgt = Ring<Rationals>::generic(Rationals{}, {"s"});
  AlgebraMap<Rationals> m(src, tgt, {parse_poly(tgt, "s^2"), parse_poly(tgt, "s^3")});
  auto k = kernel_of_map(m);
  ASSERT_EQ(k.groebner().size(), 1u);
  EXPECT_EQ(k.groebner()[0], parse_poly(src, "a^3 - b^2").monic());
}

TEST(Ideal, KernelOfVeronese) {
  auto src = Ring<Rationals>::generic(Rationals{}, {"u", "v", "w"});
  auto tgt = qring(2);
  AlgebraMap<Rationals> m(src, tgt, {parse_poly(tgt, "x1^2"), parse_poly(tgt, "x1*x2"), parse_poly(tgt, "x2^2")});
  auto k = kernel_of_map(m);
  EXPECT_TRUE(k.equals(ideal(src, {"u*w - v^2"})));
}

TEST(Ideal, IntersectionAndColon) {
  auto r = qring(2);
  auto I = ideal(r, {"x1^2", "x1*x2"});
  auto J = ideal(r, {"x2"});
  EXPECT_TRUE(ideal_intersection(I, J).equals(ideal(r, {"x1*x2"})));
  EXPECT_TRUE(ideal_colon(I, J).equals(ideal(r, {"x1"})));
  EXPECT_TRUE(ideal_colon(I, parse_poly(r, "x1")).equals(ideal(r, {"x1", "x2"})));
  EXPECT_TRUE(ideal_saturation(ideal(r, {"x1^3*x2", "x1^2*x2^2"}), parse_poly(r, "x1")).equals(ideal(r, {"x2"})));
}

TEST(Ideal, EliminateAndMembership) {
  auto r = qring(3);
  auto I = ideal(r, {"x1 - x2^2", "x3 - x2^3"});
  auto E = eliminate(I, {"x1", "x3"});
  EXPECT_TRUE(E.equals(ideal(r, {"x1^3 - x3^2"})));
  EXPECT_TRUE(I.contains(parse_poly(r, "x1^3 - x3^2")));
  EXPECT_FALSE(I.contains(parse_poly(r, "x1")));
}

TEST(Ideal, MonomialDimension) {
  auto r = qring(4);
  auto I = ideal(r, {"x1*x2", "x3*x4"});
  auto d = monomial_dim(I);
  EXPECT_EQ(d.dimension, 2);
  EXPECT_TRUE(is_independent(I, d.independent_set));
  EXPECT_EQ(monomial_dim(IdealQ(r)).dimension, 4);
  EXPECT_EQ(monomial_dim(ideal(r, {"1"})).dimension, -1);
  EXPECT_EQ(monomial_dim(ideal(r, {"x1", "x2^3", "x3*x4^2"})).dimension, 1);
  EXPECT_THROW(monomial_dim(ideal(r, {"x1 - x2"})), Error);
}

TEST(Ideal, InitialIdealDiffersByOrder) {
  auto r = qring(2);
  auto I = ideal(r, {"x1^2 - x2"});
  EXPECT_TRUE(initial_ideal(I).equals(ideal(r, {"x1^2"})));
  auto lexr = Ring<Rationals>::generic(Rationals{}, {"x2", "x1"}, MonomialOrder::lex());
  auto in = initial_ideal(I, MonomialOrder::lex());
  EXPECT_TRUE(in.equals(ideal(r, {"x1^2"})));
  (void)lexr;
}

TEST(Ideal, RandomColonIntersectionContainment) {
  gen::Rng rng(3);
  auto r = Ring<PrimeField>::generic(PrimeField(32003), gen::names(3));
  for (int i = 0; i < 20; ++i) {
    Ideal<PrimeField> I(r, {gen::nonzero_polynomial(rng, r, 2, 2), gen::nonzero_polynomial(rng, r, 2, 2)});
    Ideal<PrimeField> J(r, {gen::nonzero_polynomial(rng, r, 2, 2)});
    auto meet = ideal_intersection(I, J);
    ASSERT_TRUE(I.contains(meet));
    ASSERT_TRUE(J.contains(meet));
    auto c = ideal_colon(I, J);
    ASSERT_TRUE(c.contains(I));
    ASSERT_TRUE(I.contains(J * c));
  }
}
