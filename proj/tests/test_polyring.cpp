#include <gtest/gtest.h>

#include "generators.hpp"
#include "reeskit/parse.hpp"

using namespace reeskit;
using QQ = Polynomial<Rationals>;

namespace {

RingPtr<Rationals> qring(std::size_t n, MonomialOrder order = MonomialOrder::revlex()) {
  return Ring<Rationals>::generic(Rationals{}, gen::names(n), order);
}

}  // namespace

TEST(Field, ParseSpecs) {
  EXPECT_EQ(FieldSpec::parse("Q").kind, FieldKind::Rationals);
  auto fp = FieldSpec::parse("Fp:32003");
  EXPECT_EQ(fp.kind, FieldKind::PrimeField);
  EXPECT_EQ(fp.characteristic, 32003u);
  EXPECT_THROW(FieldSpec::parse("Fp:32004"), Error);
  EXPECT_THROW(FieldSpec::parse("R"), Error);
  EXPECT_EQ(FieldSpec::parse("Fp:7").to_string(), "Fp:7");
}

TEST(Field, PrimeArithmetic) {
  PrimeField k(7);
  EXPECT_EQ(k.from_integer(-1), 6u);
  EXPECT_EQ(k.mul(k.inv(3), 3), 1u);
  EXPECT_EQ(k.from_fraction(1, 2), 4u);
  EXPECT_THROW(k.from_fraction(1, 14), Error);
  EXPECT_THROW(k.inv(0), Error);
}

TEST(Monomial, DivisibilityAndLcm) {
  Monomial a(std::vector<Exponent>{1, 2, 0});
  Monomial b(std::vector<Exponent>{2, 2, 1});
  EXPECT_TRUE(a.divides(b));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(b.quotient(a), Monomial(std::vector<Exponent>{1, 0, 1}));
  EXPECT_EQ(Monomial::lcm(a, Monomial(std::vector<Exponent>{0, 3, 1})), Monomial(std::vector<Exponent>{1, 3, 1}));
  EXPECT_EQ((a * b).degree(), 8u);
  EXPECT_FALSE(a.coprime(b));
}

TEST(Order, GrevlexFirstVariableLargest) {
  auto o = MonomialOrder::revlex();
  Monomial x1(std::vector<Exponent>{1, 0, 0}), x2(std::vector<Exponent>{0, 1, 0});
  EXPECT_GT(o.compare(x1, x2), 0);
  // x2^2 > x1*x3 in grevlex
  EXPECT_GT(o.compare(Monomial(std::vector<Exponent>{0, 2, 0}), Monomial(std::vector<Exponent>{1, 0, 1})), 0);
  // lex disagrees
  EXPECT_LT(MonomialOrder::lex().compare(Monomial(std::vector<Exponent>{0, 2, 0}), Monomial(std::vector<Exponent>{1, 0, 1})), 0);
  EXPECT_GT(o.compare(Monomial(std::vector<Exponent>{0, 0, 2}), x1), 0);
}

TEST(Order, EliminationBlock) {
  auto o = MonomialOrder::elimination({true, false, false});
  Monomial t(std::vector<Exponent>{1, 0, 0}), big(std::vector<Exponent>{0, 5, 5});
  EXPECT_GT(o.compare(t, big), 0);
}

TEST(Ring, LabelledSortAndGradings) {
  std::vector<VariableMeta> vars{
      {"T_1_0", VariableLabel{1, {0}}, {}},
      {"T_2_1", VariableLabel{2, {1}}, {}},
      {"x1", VariableLabel{0, {1}}, {}},
      {"T_1_1", VariableLabel{1, {1}}, {}},
      {"x2", VariableLabel{0, {0}}, {}},
  };
  auto ring = build_ring(Rationals{}, vars);
  EXPECT_EQ(ring->names(), (std::vector<std::string>{"T_2_1", "T_1_1", "T_1_0", "x1", "x2"}));
  EXPECT_EQ(ring->grading("Deg"), (std::vector<int>{1, 1, 0, 1, 0}));
  EXPECT_EQ(ring->grading("std-x"), (std::vector<int>{0, 0, 0, 1, 1}));
  EXPECT_EQ(ring->grading("std-T"), (std::vector<int>{1, 1, 1, 0, 0}));
  EXPECT_THROW(ring->index_of("y"), Error);
  EXPECT_THROW(ring->grading("nope"), Error);
  vars.push_back({"dup", VariableLabel{1, {0}}, {}});
  EXPECT_THROW(build_ring(Rationals{}, vars), Error);
}

TEST(Polynomial, ParsePrintRoundTrip) {
  auto r = qring(3);
  auto p = parse_poly(r, "x1^2 - 2*x2*x3 + 3/2 x1 x2");
  EXPECT_EQ(p.to_string(), "x1^2 + 3/2*x1*x2 - 2*x2*x3");
  EXPECT_EQ(parse_poly(r, p.to_string()), p);
  EXPECT_EQ(parse_poly(r, "x1 - x1").to_string(), "0");
  EXPECT_THROW(parse_poly(r, "x1 + y"), ParseError);
  EXPECT_THROW(parse_poly(r, "x1 +"), ParseError);
  EXPECT_THROW(parse_poly(r, "x1 ** x2"), ParseError);
  auto fr = Ring<PrimeField>::generic(PrimeField(5), gen::names(2));
  EXPECT_THROW(parse_poly(fr, "1/5 x1"), ParseError);
  EXPECT_EQ(parse_poly(fr, "1/2 x1").to_string(), "-2*x1");
  EXPECT_EQ(parse_poly(fr, "1/3 x1 + x2").to_string(), "2*x1 + x2");
  auto q = parse_poly(fr, "4*x1^2 + 3*x2");
  EXPECT_EQ(q.to_string(), "-x1^2 - 2*x2");
  EXPECT_EQ(parse_poly(fr, q.to_string()), q);
}

TEST(Polynomial, Arithmetic) {
  auto r = qring(2);
  auto x = QQ::variable(r, "x1"), y = QQ::variable(r, "x2");
  EXPECT_EQ((x + y) * (x - y), parse_poly(r, "x1^2 - x2^2"));
  EXPECT_EQ((x + y).pow(3), parse_poly(r, "x1^3 + 3 x1^2 x2 + 3 x1 x2^2 + x2^3"));
  EXPECT_EQ(poly_arith(ArithOp::Sub, x, x).to_string(), "0");
  EXPECT_TRUE((x * y).is_homogeneous());
  EXPECT_FALSE((x * y + x).is_homogeneous());
  auto other = qring(3);
  EXPECT_THROW(x + QQ::variable(other, 0), Error);
  EXPECT_EQ(x.change_ring(other), QQ::variable(other, "x1"));
}

TEST(Polynomial, RandomAxioms) {
  gen::Rng rng(11);
  auto r = qring(3);
  for (int i = 0; i < 200; ++i) {
    auto a = gen::polynomial(rng, r, 4, 3), b = gen::polynomial(rng, r, 4, 3), c = gen::polynomial(rng, r, 4, 3);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, QQ(r));
    ASSERT_EQ(parse_poly(r, a.to_string()), a);
  }
}
