#include <gtest/gtest.h>

#include "reeskit/instance_file.hpp"

using namespace reeskit;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_instance_file(text);
  } catch (const InstanceFileError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(InstanceFile, Powers) {
  auto f = parse_instance_file("# comment\nmode = powers\nfield = Fp:101\nn = 3   # trailing\na = (0, 1, 2)\nseed = 9\npair-cap = 50\ndeg-cap = 7\ndelta = 1, 3\n");
  const auto& inst = std::get<Instance>(f.target);
  EXPECT_EQ(inst.n, 3);
  EXPECT_EQ(inst.a, (std::vector<int>{1, 2}));
  EXPECT_EQ(inst.stripped_zeros, 1);
  EXPECT_EQ(inst.field, FieldSpec::prime(101));
  EXPECT_EQ(f.seed, 9u);
  auto p = f.params();
  EXPECT_EQ(p.gb.max_pairs, 50u);
  EXPECT_EQ(p.gb.max_degree, 7u);
  EXPECT_EQ(p.deltas, (std::vector<int>{1, 3}));
}

TEST(InstanceFile, DefaultsToPowersOverQ) {
  auto f = parse_instance_file("n = 2\na = 1\n");
  EXPECT_TRUE(f.is_powers());
  EXPECT_EQ(field_of(f.target), FieldSpec::rationals());
  EXPECT_EQ(f.seed, 1u);
}

TEST(InstanceFile, Truncation) {
  auto f = parse_instance_file("mode = truncation\nn = 2\nf = x1^2, x2^2\nd = 3\nchecks = rees-presentation, height-Q\n");
  const auto& ti = std::get<TruncationInstance>(f.target);
  EXPECT_EQ(ti.f, (std::vector<std::string>{"x1^2", "x2^2"}));
  EXPECT_EQ(ti.d, 3);
  EXPECT_EQ(f.checks, (std::vector<CheckKind>{CheckKind::ReesPresentation, CheckKind::HeightQ}));
}

TEST(InstanceFile, Diagnostics) {
  try {
    parse_instance_file("n = 2\n  a = 1\nfield = F4\n", "demo.txt");
    FAIL();
  } catch (const InstanceFileError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 9u);
    EXPECT_EQ(std::string(e.what()).rfind("demo.txt:3:9:", 0), 0u);
  }
  EXPECT_EQ(error_line("n = 2\na = 1\nbogus = 1\n"), 3u);
  EXPECT_EQ(error_line("n = 2\na = 1\nn = 3\n"), 3u);
  EXPECT_EQ(error_line("n = 2\njust text\n"), 2u);
  EXPECT_EQ(error_line("n = 2\n"), 2u);                          // missing a
  EXPECT_EQ(error_line("n = x\na = 1\n"), 1u);
  EXPECT_EQ(error_line("n = 2\na = 2, 1\n"), 2u);                // not ascending
  EXPECT_EQ(error_line("n = 2\na = 0\n"), 2u);                   // all zero
  EXPECT_EQ(error_line("n = 1\na = 1\n"), 1u);
  EXPECT_EQ(error_line("n = 2\na = 1,,2\n"), 2u);
  EXPECT_EQ(error_line("n = 2\na = 1\npair-cap = 0\n"), 3u);
  EXPECT_EQ(error_line("n = 2\na = 1\nchecks = nope\n"), 3u);
  EXPECT_EQ(error_line("n = 2\na = 1\nd = 3\n"), 3u);            // truncation key in powers mode
  EXPECT_EQ(error_line("mode = cubes\nn = 2\na = 1\n"), 1u);
  EXPECT_EQ(error_line("mode = truncation\nn = 2\nf = x1 + 1\nd = 2\n"), 3u);  // inhomogeneous
  EXPECT_EQ(error_line("mode = truncation\nn = 2\nf = x1, x1\nd = 2\n"), 3u);  // not regular
  EXPECT_EQ(error_line("mode = truncation\nn = 2\nf = x1^2\nd = 1\n"), 4u);    // d below deg f1
  EXPECT_EQ(error_line("mode = truncation\nn = 2\nf = y1\nd = 2\n"), 3u);      // unknown variable
}

TEST(InstanceFile, RoundTrip) {
  for (const char* text : {"n = 3\na = 0, 1, 2\nseed = 4\ndeg-cap = 9\nchecks = dimension\nsubmatrices = 2\nwitness-bound = 5\n",
                           "mode = truncation\nfield = Fp:7\nn = 3\nf = x1^2 - x2*x3, x2^2\nd = 5\ndelta = 2\n"}) {
    auto f = parse_instance_file(text);
    auto g = parse_instance_file(f.to_text());
    EXPECT_EQ(f.to_text(), g.to_text());
    EXPECT_EQ(instance_json(f.target), instance_json(g.target));
  }
}

TEST(InstanceFile, ShippedInstancesParse) {
  for (const char* name : {"powers_2_1.txt", "powers_3_12.txt", "powers_3_22.txt", "veronese_symbolic.txt", "truncation_linear.txt", "truncation_small_d.txt",
                           "truncation_cubes.txt", "truncation_fp.txt", "oversized.txt"}) {
    EXPECT_NO_THROW(load_instance_file(std::string(REESKIT_INSTANCE_DIR) + "/" + name)) << name;
  }
}
