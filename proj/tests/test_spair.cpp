#include <gtest/gtest.h>

#include "reeskit/parse.hpp"
#include "reeskit/spair.hpp"

using namespace reeskit;

namespace {

struct Case {
  int n;
  std::vector<int> a;
};

const std::vector<Case> kFamily{{2, {1}}, {2, {2}}, {2, {1, 1}}, {2, {1, 2}}, {3, {1, 1}}, {3, {1, 2}}, {3, {2, 2}}, {4, {1, 1}}};

}  // namespace

TEST(SPair, ExampleCounts) {
  auto m = ReesModel<Rationals>::make(Rationals{}, 3, {1, 2});
  MinorTable<Rationals> table(m.B, m.t_ring);
  EXPECT_EQ(table.minors().size(), 18u);
  auto sum = certify_all_pairs(table);
  EXPECT_EQ(sum.pairs, 153u);
  EXPECT_TRUE(sum.ok());
  EXPECT_EQ(sum.coprime + sum.case1 + sum.case2 + sum.case3, 153u);
}

TEST(SPair, FamilyHasNoUnclassifiedPairs) {
  for (const auto& c : kFamily) {
    auto m = ReesModel<Rationals>::make(Rationals{}, c.n, c.a);
    for (const auto* mat : {&m.B, &m.C}) {
      MinorTable<Rationals> table(*mat, mat == &m.B ? m.t_ring : m.s_ring);
      auto sum = certify_all_pairs(table);
      EXPECT_TRUE(sum.ok()) << "n=" << c.n << " unclassified=" << sum.unclassified.size();
    }
  }
}

// Independent re-check: every non-coprime certificate's identity holds when
// re-parsed from its printed parts.
TEST(SPair, CertificatesReverify) {
  auto m = ReesModel<Rationals>::make(Rationals{}, 3, {1, 2});
  MinorTable<Rationals> table(m.B, m.t_ring);
  const auto& ring = m.t_ring;
  auto P = [&](const std::string& s) { return parse_poly(ring, s); };
  std::size_t checked = 0;
  for (std::size_t i = 0; i < table.minors().size(); ++i) {
    for (std::size_t j = i + 1; j < table.minors().size(); ++j) {
      auto cert = structured_spair_certificate(table, i, j);
      ASSERT_TRUE(cert.verified);
      if (cert.case_label == 0 || cert.equal_leading_terms) continue;
      auto h1 = P(cert.minor1).monic(), h2 = P(cert.minor2).monic();
      auto m1 = cert.m1 == "0" ? Polynomial<Rationals>(ring) : P(cert.m1);
      auto m2 = cert.m2 == "0" ? Polynomial<Rationals>(ring) : P(cert.m2);
      EXPECT_EQ(P(cert.d) * h1 - P(cert.g) * h2, P(cert.b) * m1 - P(cert.f) * m2);
      auto lcm = Monomial::lcm(h1.leading_monomial(), h2.leading_monomial());
      if (!m1.is_zero()) {
        EXPECT_LT(ring->order().compare((P(cert.b) * m1).leading_monomial(), lcm), 0);
      }
      if (!m2.is_zero()) {
        EXPECT_LT(ring->order().compare((P(cert.f) * m2).leading_monomial(), lcm), 0);
      }
      ++checked;
    }
  }
  EXPECT_EQ(checked, 153u - certify_all_pairs(table).coprime - certify_all_pairs(table).equal_lt);
}

TEST(SPair, CoprimePair) {
  auto m = ReesModel<Rationals>::make(Rationals{}, 3, {1, 2});
  MinorTable<Rationals> table(m.B, m.t_ring);
  bool found = false;
  for (std::size_t i = 0; i < table.minors().size() && !found; ++i) {
    for (std::size_t j = i + 1; j < table.minors().size(); ++j) {
      if (table.minors()[i].poly.support().size() + table.minors()[j].poly.support().size() ==
          (table.minors()[i].poly + table.minors()[j].poly).support().size()) {
        EXPECT_EQ(structured_spair_certificate(table, i, j).case_label, 0);
        found = true;
        break;
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(SPair, IsMinorOrZero) {
  auto m = ReesModel<Rationals>::make(Rationals{}, 2, {1});
  MinorTable<Rationals> table(m.C, m.s_ring);
  const auto& h = table.minors().front().poly;
  EXPECT_TRUE(table.is_minor_or_zero(h));
  EXPECT_TRUE(table.is_minor_or_zero(-h));
  EXPECT_TRUE(table.is_minor_or_zero(Polynomial<Rationals>(m.s_ring)));
  EXPECT_FALSE(table.is_minor_or_zero(h + h));
}
