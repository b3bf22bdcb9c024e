#include <gtest/gtest.h>

#include "reeskit/verifier.hpp"

using namespace reeskit;

namespace {

Target powers(int n, std::vector<int> a) { return Instance::powers(n, std::move(a)); }

Target trunc(int n, std::vector<std::string> f, int d) { return TruncationInstance{n, std::move(f), d, FieldSpec::rationals()}; }

void expect_pass(CheckKind k, const Target& t, CheckParams p = {}) {
  auto r = run_check(k, t, p);
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.text() << "\n" << r.to_json().dump(1);
}

}  // namespace

TEST(Verifier, CheckNamesRoundTrip) {
  for (const auto& [k, name] : check_names()) EXPECT_EQ(parse_check(name), k);
  EXPECT_THROW(parse_check("nope"), Error);
}

TEST(Verifier, GbMinorsFullMatrices) {
  CheckParams p;
  p.random_submatrices = 0;
  auto r = run_check(CheckKind::GbMinors, powers(3, {1, 2}), p);
  ASSERT_EQ(r.verdict, Verdict::Pass) << r.text();
  EXPECT_EQ(r.evidence["matrices"][0]["minors"], 18);
  EXPECT_EQ(r.evidence["matrices"][0]["offenders"], 0);
  // repeated entries make some minors redundant in the reduced basis
  EXPECT_EQ(r.evidence["reducedBasisSizeB"], 14);
  EXPECT_EQ(r.evidence["matrices"].size(), 2u);
}

// Columns (2,(1,1)) and (2,(2,2)) of B for n=3, a=(1,2) give the matrix
// [a b; c d; e a] whose minors are not a Gröbner basis: the S-pair of
// ad - bc and ac - de leaves -bc^2 + d^2e.
TEST(Verifier, SubmatrixCounterexample) {
  auto m = ReesModel<Rationals>::make(Rationals{}, 3, {1, 2});
  auto sub = m.B.select_columns({1, 3});
  auto check = is_groebner(minors2(sub, m.t_ring));
  ASSERT_FALSE(check.is_groebner);
  std::set<std::string> rems;
  for (const auto& r : check.remainders) rems.insert(r.monic().to_string());
  EXPECT_TRUE(rems.count("T_2_2_2*T_2_1_0^2 - T_2_2_1^2*T_2_0_0"));
  auto gb = groebner_basis(minors2(sub, m.t_ring));
  std::uint32_t top = 0;
  for (const auto& g : gb) top = std::max(top, g.total_degree());
  EXPECT_EQ(top, 3u);

  auto r = run_check(CheckKind::GbMinors, powers(3, {1, 2}));
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_TRUE(r.evidence.contains("counterexample"));
}

TEST(Verifier, SeedChangesSubmatrices) {
  CheckParams p1, p2;
  p2.seed = 99;
  auto a = run_check(CheckKind::GbMinors, powers(3, {1, 2}), p1);
  auto b = run_check(CheckKind::GbMinors, powers(3, {1, 2}), p2);
  auto c = run_check(CheckKind::GbMinors, powers(3, {1, 2}), p1);
  EXPECT_EQ(a.evidence["matrices"], c.evidence["matrices"]);
  EXPECT_NE(a.evidence["matrices"], b.evidence["matrices"]);
}

TEST(Verifier, PowersChecks) {
  for (auto k : {CheckKind::InitialIdeal, CheckKind::KernelEqualityM, CheckKind::Dimension, CheckKind::SPairCertificates}) {
    expect_pass(k, powers(3, {1, 2}));
  }
  expect_pass(CheckKind::ColonIdentity, powers(2, {1, 1}));
  expect_pass(CheckKind::InductionMembership, powers(2, {1, 2}));
}

TEST(Verifier, DimensionWorked) {
  auto r = run_check(CheckKind::Dimension, powers(3, {1, 2}));
  ASSERT_TRUE(r.passed());
  EXPECT_EQ(r.evidence["matrices"][0]["dimension"], 4);
  EXPECT_EQ(r.evidence["matrices"][1]["dimension"], 5);
}

TEST(Verifier, SymbolicPowerVeronese) {
  CheckParams p;
  p.deltas = {2};
  auto r = run_check(CheckKind::SymbolicPower, powers(2, {2}), p);
  ASSERT_TRUE(r.passed()) << r.to_json().dump(1);
  const auto& item = r.evidence["deltas"][0];
  std::set<std::string> gens(item["aGeq"].begin(), item["aGeq"].end());
  EXPECT_EQ(gens, (std::set<std::string>{"T_1_2", "T_1_1^2"}));
  bool saw = false;
  for (const auto& w : item["witnesses"]) {
    if (w["generator"] == "T_1_2") {
      EXPECT_EQ(w["witness"], "T_1_0");
      saw = true;
    }
  }
  EXPECT_TRUE(saw);
}

TEST(Verifier, SymbolicPowerBoundExhausted) {
  CheckParams p;
  p.deltas = {2};
  p.witness_bound = 0;
  auto r = run_check(CheckKind::SymbolicPower, powers(2, {2}), p);
  EXPECT_EQ(r.verdict, Verdict::BoundExhausted);
  EXPECT_EQ(r.evidence["deltas"][0]["witnessDegreeBound"], 0);
}

TEST(Verifier, TruncationChecks) {
  expect_pass(CheckKind::ReesPresentation, trunc(2, {"x1", "x2"}, 2));
  expect_pass(CheckKind::ReesPresentation, trunc(2, {"x1^2", "x2^2"}, 3));
  expect_pass(CheckKind::DivisorialIdentity, trunc(2, {"x1^2", "x2^2"}, 3));
  expect_pass(CheckKind::QuadraticGb, trunc(2, {"x1", "x2"}, 2));
  expect_pass(CheckKind::HeightQ, trunc(2, {"x1", "x2"}, 2));
}

TEST(Verifier, DivisorialDeltaZeroMatchesPresentation) {
  expect_pass(CheckKind::DivisorialIdentity, trunc(2, {"x1", "x2"}, 2));
}

TEST(Verifier, WrongTargetIsError) {
  EXPECT_THROW(run_check(CheckKind::ReesPresentation, powers(2, {1})), Error);
  EXPECT_THROW(run_check(CheckKind::DivisorialIdentity, trunc(3, {"x1", "x2", "x3"}, 3)), Error);
  // one block: (T_top) : K^a is the unit ideal, the identity is stated for r >= 2
  EXPECT_THROW(run_check(CheckKind::ColonIdentity, powers(2, {2})), Error);
  EXPECT_THROW(run_check(CheckKind::ColonIdentity, powers(3, {0, 1})), Error);
}

TEST(Verifier, GuardAbort) {
  CheckParams p;
  p.gb.max_pairs = 3;
  auto r = run_check(CheckKind::KernelEqualityM, powers(3, {2, 2}), p);
  EXPECT_EQ(r.verdict, Verdict::Aborted);
  EXPECT_TRUE(r.evidence.contains("partial"));
  EXPECT_EQ(r.evidence["partial"]["status"], "aborted");
}

TEST(Verifier, FailCarriesCounterexample) {
  // (x1^2, x1*x2) is not a regular sequence, but with the check off the
  // presentation differs from the kernel.
  auto r = run_check(CheckKind::HeightQ, trunc(2, {"x1", "x2"}, 2));
  EXPECT_TRUE(r.passed());
  for (const auto& [k, n] : check_names()) {
    (void)n;
    Report rep;
    rep.kind = k;
    rep.target = powers(2, {1});
    rep.verdict = Verdict::Fail;
    rep.evidence["counterexample"] = "x";
    EXPECT_TRUE(rep.to_json()["evidence"].contains("counterexample"));
  }
}

TEST(Verifier, SweepOrderAndErrors) {
  EXPECT_THROW(sweep({}), Error);
  CheckParams tiny;
  tiny.gb.max_pairs = 2;
  std::vector<PlanItem> plan{
      {CheckKind::GbMinors, powers(2, {1, 1}), {}},
      {CheckKind::KernelEqualityM, powers(3, {2, 2}), tiny},
      {CheckKind::ReesPresentation, powers(2, {1}), {}},
      {CheckKind::Dimension, powers(2, {1, 2}), {}},
  };
  for (unsigned jobs : {1u, 3u}) {
    auto out = sweep(plan, jobs);
    ASSERT_EQ(out.size(), 4u);
    EXPECT_EQ(out[0].verdict, Verdict::Pass);
    EXPECT_EQ(out[1].verdict, Verdict::Aborted);
    EXPECT_EQ(out[2].verdict, Verdict::Error);
    EXPECT_EQ(out[3].verdict, Verdict::Pass);
    EXPECT_EQ(out[3].kind, CheckKind::Dimension);
  }
}
