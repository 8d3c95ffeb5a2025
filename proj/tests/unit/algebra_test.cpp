#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "brauerlab/algebra.hpp"
#include "brauerlab/error.hpp"
#include "brauerlab/gt.hpp"
#include "../oracles/basis_oracle.hpp"

namespace brauerlab {
namespace {

BrauerConfiguration config6() { return BrauerConfiguration({"0", "1"}, {{"0", "1", "1"}, {"0", "1"}}); }

std::vector<BrauerConfiguration> corpus() {
  return {
      config6(),
      BrauerConfiguration({"0", "1"}, {{"0", "1"}, {"0", "1"}}),
      BrauerConfiguration({"0", "1"}, {{"0", "1", "1"}, {"0", "1"}}, {{"0", 2}}),
      BrauerConfiguration({"a", "b", "c"}, {{"a", "b", "b", "c"}, {"c", "a"}, {"b", "c", "c"}}),
      BrauerConfiguration({"a", "b"}, {{"a", "b"}, {"a", "a", "b"}}, {{"b", 3}}),
      BrauerConfiguration({"0", "1"}, {{"0", "1", "1", "0"}, {"1", "0", "1", "1"}, {"1", "0", "0", "1"}}),
      gt::build_gt_configuration(1),
      gt::build_gt_configuration(2),
  };
}

std::set<std::string> names_of(const BrauerConfiguration& c, const Quiver& q) {
  std::set<std::string> out;
  for (const auto& a : q.arrows) out.insert(arrow_name(c, a));
  return out;
}

TEST(Quiver, ConfigSix) {
  const auto c = config6();
  const auto q = build_quiver(c);
  EXPECT_EQ(q.node_count, 2u);
  EXPECT_EQ(q.arrows.size(), 5u);
  EXPECT_EQ(q.loop_count(), 1u);
  EXPECT_EQ(names_of(c, q), (std::set<std::string>{"a0_1", "a0_2", "a1_1", "a1_2", "l1_3"}));
  for (const auto& a : q.arrows) {
    if (a.is_loop()) EXPECT_EQ(a.source, 0u);
  }
}

TEST(Quiver, SpecialCyclesOfConfigSix) {
  const auto c = config6();
  const auto q = build_quiver(c);
  std::vector<std::string> listed;
  for (const auto& s : special_cycles(c, q)) listed.push_back(cycle_name(c, s) + " = " + path_name(c, q, s.arrows));
  EXPECT_EQ(listed, (std::vector<std::string>{
                        "C_0,V1^1 = a0_1 a0_2",
                        "C_1,V1^1 = l1_3 a1_1 a1_2",
                        "C_1,V1^2 = a1_1 a1_2 l1_3",
                        "C_0,V2^1 = a0_2 a0_1",
                        "C_1,V2^1 = a1_2 l1_3 a1_1",
                    }));
  for (const auto& s : special_cycles(c, q)) {
    for (std::size_t i = 0; i < s.arrows.size(); ++i) {
      const auto& a = q.arrows[s.arrows[i]];
      const auto& b = q.arrows[s.arrows[(i + 1) % s.arrows.size()]];
      EXPECT_EQ(a.target, b.source);
    }
  }
}

TEST(Quiver, RejectsNonReducedInput) {
  BrauerConfiguration c({"0", "1", "2"}, {{"0", "1"}, {"0", "2"}});
  EXPECT_THROW(build_quiver(c), NonReducedError);
  EXPECT_THROW(dimension(c), NonReducedError);
}

TEST(Quiver, SkipPolicyGivesTwoCycle) {
  BrauerConfiguration c({"0", "1", "2"}, {{"0", "1"}, {"0", "2"}});
  const auto q = build_quiver(c, TruncatedPolicy::skip);
  ASSERT_EQ(q.arrows.size(), 2u);
  EXPECT_EQ(q.arrows[0].source, q.arrows[1].target);
  EXPECT_EQ(q.arrows[1].source, q.arrows[0].target);
  EXPECT_EQ(dimension(c, TruncatedPolicy::skip), 2u * 2 + 2u * 1);
}

TEST(Quiver, SkipPolicyStillNeedsAnArrowPerPolygon) {
  BrauerConfiguration c({"0", "1", "2", "3"}, {{"0", "1"}, {"2", "3"}});
  EXPECT_THROW(build_quiver(c, TruncatedPolicy::skip), NonReducedError);
}

TEST(Quiver, GtNecklace) {
  const auto c = gt::build_gt_configuration(1);
  const auto q = build_quiver(c);
  EXPECT_EQ(q.node_count, 3u);
  EXPECT_EQ(q.arrows.size(), 9u);
  EXPECT_EQ(q.loop_count(), 0u);
  for (std::size_t v = 0; v < 3; ++v) {
    ASSERT_EQ(q.vertex_cycles[v].size(), 3u);
    // Each family runs P1 -> P2 -> P3 -> P1.
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(q.arrows[q.vertex_cycles[v][i]].source, i);
      EXPECT_EQ(q.arrows[q.vertex_cycles[v][i]].target, (i + 1) % 3);
    }
  }
}

TEST(Ideal, ForbiddenProductsOfConfigSix) {
  const auto c = config6();
  const auto q = build_quiver(c);
  std::set<std::string> products;
  std::size_t differences = 0;
  for (const auto& g : ideal_generators(c, q)) {
    if (g.kind == IdealKind::forbidden_product) products.insert(path_name(c, q, g.lhs));
    if (g.kind == IdealKind::cycle_difference) ++differences;
  }
  for (const char* p : {"l1_3 a0_1", "a1_1 a0_2", "a0_2 l1_3", "a0_2 a1_1", "a1_2 a0_1"}) {
    EXPECT_TRUE(products.count(p)) << p;
  }
  EXPECT_EQ(differences, 3u);
}

TEST(Ideal, CycleDifferenceAtFirstPolygon) {
  const auto c = config6();
  const auto q = build_quiver(c);
  bool found = false;
  for (const auto& g : ideal_generators(c, q)) {
    if (g.kind == IdealKind::cycle_difference && path_name(c, q, g.lhs) == "a0_1 a0_2" &&
        path_name(c, q, g.rhs) == "l1_3 a1_1 a1_2") {
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(describe(c, q, ideal_generators(c, q).front()), "cycle-difference: a0_1 a0_2 - l1_3 a1_1 a1_2 = 0");
}

TEST(Ideal, OneOverrunPerRotation) {
  const auto c = config6();
  const auto q = build_quiver(c);
  std::size_t overruns = 0;
  for (const auto& g : ideal_generators(c, q)) overruns += g.kind == IdealKind::cycle_overrun;
  EXPECT_EQ(overruns, special_cycles(c, q).size());
}

TEST(Ideal, LoopPowerForValencyOneVertex) {
  BrauerConfiguration c({"a", "b"}, {{"a", "b"}, {"b", "b"}}, {{"a", 2}});
  const auto q = build_quiver(c);
  std::vector<IdealGenerator> powers;
  for (const auto& g : ideal_generators(c, q)) {
    if (g.kind == IdealKind::loop_power) powers.push_back(g);
  }
  ASSERT_EQ(powers.size(), 1u);
  EXPECT_EQ(powers[0].lhs.size(), 3u);
  EXPECT_TRUE(q.arrows[powers[0].lhs[0]].is_loop());
}

TEST(Ideal, ForbiddenProductsJoinDistinctVertices) {
  for (const auto& c : corpus()) {
    const auto q = build_quiver(c);
    for (const auto& g : ideal_generators(c, q)) {
      if (g.kind != IdealKind::forbidden_product) continue;
      ASSERT_EQ(g.lhs.size(), 2u);
      EXPECT_NE(q.arrows[g.lhs[0]].vertex, q.arrows[g.lhs[1]].vertex);
      EXPECT_EQ(q.arrows[g.lhs[0]].target, q.arrows[g.lhs[1]].source);
    }
  }
}

TEST(Dimension, WorkedValues) {
  EXPECT_EQ(dimension(config6()), 12u);
  EXPECT_EQ(center_dimension(config6()), 4);
  EXPECT_EQ(dimension(BrauerConfiguration({"0", "1"}, {{"0", "1"}, {"0", "1"}})), 8u);
  for (unsigned r = 1; r <= 3; ++r) {
    const std::uint64_t m = 2 * r + 1;
    EXPECT_EQ(dimension(gt::build_gt_configuration(r)), 2 * m + m * m * (m - 1));
  }
}

TEST(Dimension, CenterRequiresConnectedInput) {
  BrauerConfiguration c({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "b"}, {"c", "d"}, {"c", "d"}});
  EXPECT_THROW(center_dimension(c), DomainError);
  EXPECT_FALSE(summarize(c).center_dim.has_value());
}

TEST(Dimension, CenterOfClusterConfiguration) {
  BrauerConfiguration phi2({"0", "1"}, {{"0", "1", "1", "0"}, {"1", "0", "1", "1"}, {"1", "0", "0", "1"}});
  const auto q = build_quiver(phi2);
  EXPECT_EQ(center_dimension(phi2, q), 1 + 2 + 3 - 2 + static_cast<std::int64_t>(q.loop_count()));
}

TEST(Dimension, CenterWithoutLoops) {
  // Two polygons, two vertices, no loops.
  BrauerConfiguration c({"0", "1"}, {{"0", "1"}, {"0", "1"}});
  EXPECT_EQ(build_quiver(c).loop_count(), 0u);
  EXPECT_EQ(center_dimension(c), 1 + 2);
}

TEST(Dimension, CenterOnCorpusWithLoops) {
  for (const auto& c : corpus()) {
    const auto q = build_quiver(c);
    if (!is_connected(c)) continue;
    std::int64_t mu = 0;
    std::int64_t special = 0;
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
      mu += c.multiplicity(v);
      special += c.valency(v) == 1 && c.multiplicity(v) > 1;
    }
    const std::int64_t expected = 1 + mu + static_cast<std::int64_t>(c.polygon_count()) -
                                  static_cast<std::int64_t>(c.vertex_count()) +
                                  static_cast<std::int64_t>(q.loop_count()) - special;
    EXPECT_EQ(center_dimension(c, q), expected);
    if (q.loop_count() > 0) EXPECT_GE(center_dimension(c, q), 2);
  }
}

TEST(Grading, Examples) {
  EXPECT_FALSE(length_grading(config6()).has_value());
  for (unsigned r = 1; r <= 3; ++r) EXPECT_EQ(length_grading(gt::build_gt_configuration(r)), 2 * r + 1);
  BrauerConfiguration uniform({"0", "1"}, {{"0", "1"}, {"0", "1"}});
  EXPECT_EQ(length_grading(uniform), 2u);
}

TEST(Basis, ConfigSixHasTwelveClasses) {
  const auto c = config6();
  const auto basis = enumerate_basis(c);
  ASSERT_EQ(basis.size(), 12u);
  std::size_t idem = 0, len1 = 0, len2 = 0, cycles = 0;
  for (const auto& e : basis) {
    if (e.kind == BasisKind::idempotent) ++idem;
    if (e.kind == BasisKind::prefix && e.arrows.size() == 1) ++len1;
    if (e.kind == BasisKind::prefix && e.arrows.size() == 2) ++len2;
    if (e.kind == BasisKind::cycle) ++cycles;
  }
  EXPECT_EQ(idem, 2u);
  EXPECT_EQ(len1, 5u);
  EXPECT_EQ(len2, 3u);
  EXPECT_EQ(cycles, 2u);
}

TEST(Basis, MatchesPathOracleOnCorpus) {
  for (const auto& c : corpus()) {
    const auto q = build_quiver(c);
    const auto basis = enumerate_basis(c, q);
    const auto expected = oracle::path_basis(c);
    EXPECT_EQ(basis.size(), dimension(c));
    EXPECT_EQ(basis.size(), expected.dimension());
    std::set<oracle::Path> prefixes;
    std::size_t cycles = 0;
    for (const auto& e : basis) {
      if (e.kind == BasisKind::cycle) ++cycles;
      if (e.kind != BasisKind::prefix) continue;
      oracle::Path p;
      for (auto id : e.arrows) p.emplace_back(q.arrows[id].vertex, q.arrows[id].step);
      prefixes.insert(p);
    }
    EXPECT_EQ(prefixes, expected.proper_paths);
    EXPECT_EQ(cycles, expected.socle);
  }
}

TEST(Basis, ArrowCountIsValencySum) {
  for (const auto& c : corpus()) {
    std::size_t val = 0;
    for (std::size_t v = 0; v < c.vertex_count(); ++v) val += c.valency(v);
    EXPECT_EQ(build_quiver(c).arrows.size(), val);
  }
}

TEST(Summary, ConfigSix) {
  const auto s = summarize(config6(), true);
  EXPECT_EQ(s.dim, 12u);
  EXPECT_EQ(s.center_dim, 4);
  EXPECT_EQ(s.basis_size, 12u);
  EXPECT_FALSE(s.graded.has_value());
}

TEST(Dot, StableAndLabelled) {
  const auto c = config6();
  const auto q = build_quiver(c);
  const auto dot = quiver_dot(c, q);
  EXPECT_EQ(dot, quiver_dot(c, build_quiver(c)));
  EXPECT_NE(dot.find("V1 [label=\"V1: 0^1 1^2\"]"), std::string::npos);
  EXPECT_NE(dot.find("V1 -> V1 [label=\"l1_3\"]"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 5);
}

}  // namespace
}  // namespace brauerlab
