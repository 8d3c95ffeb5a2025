#include <set>

#include <gtest/gtest.h>

#include "brauerlab/configuration.hpp"
#include "brauerlab/gt.hpp"
#include "../oracles/gt_oracle.hpp"
#include "../oracles/semigroup_oracle.hpp"

namespace brauerlab::gt {
namespace {

TEST(Patterns, CountMatchesBruteForce) {
  const std::vector<Row> tops = {{2, 0}, {3, 1, 0}, {4, 2, 2, 0}, {5, 3, 1}, {3, 3, 3}, {6, 4, 2, 0}, {-1, -2, -4}};
  for (const auto& top : tops) {
    EXPECT_EQ(count_patterns({top, std::nullopt}), BigInt(oracle::brute_force_pattern_count(top)));
    const auto listed = list_patterns({top, std::nullopt});
    EXPECT_EQ(listed.size(), oracle::brute_force_pattern_count(top));
    for (const auto& p : listed) EXPECT_TRUE(p.is_valid());
  }
}

TEST(Patterns, ContentFiltersRowSums) {
  const Row top{3, 1, 0};
  std::map<std::vector<std::int64_t>, std::size_t> by_content;
  for (const auto& p : list_patterns({top, std::nullopt})) {
    std::vector<std::int64_t> sums;
    for (const auto& row : p.rows) {
      std::int64_t s = 0;
      for (auto v : row) s += v;
      sums.push_back(s);
    }
    std::vector<std::int64_t> content;
    for (std::size_t k = sums.size(); k-- > 0;) content.push_back(sums[k] - (k + 1 < sums.size() ? sums[k + 1] : 0));
    ++by_content[content];
  }
  for (const auto& [content, n] : by_content) {
    EXPECT_EQ(count_patterns({top, content}), BigInt(n));
  }
}

TEST(Patterns, SpacedFormula) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned r = 0; r <= 3; ++r) {
      EXPECT_EQ(gt_count_formula(n, r), count_patterns({spaced_top_row(n, r), std::nullopt})) << n << "," << r;
    }
  }
}

TEST(Patterns, Validation) {
  EXPECT_THROW(count_patterns({{}, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(count_patterns({{1, 2}, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(count_patterns({{2, 1}, std::vector<std::int64_t>{1}}), std::invalid_argument);
}

TEST(Monotone, CountsAgreeWithBruteForce) {
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(monotone_count(n), BigInt(oracle::brute_force_monotone(n).size()));
    EXPECT_EQ(monotone_triangles(n).size(), oracle::brute_force_monotone(n).size());
  }
  const std::vector<int> asm_values = {1, 2, 7, 42, 429, 7436};
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(asm_count(n), BigInt(asm_values[n - 1]));
}

TEST(Monotone, RefinedCounts) {
  const auto refined = refined_monotone_counts(5);
  const std::vector<int> expected = {42, 105, 135, 105, 42};
  ASSERT_EQ(refined.size(), 5u);
  for (unsigned r = 1; r <= 5; ++r) {
    EXPECT_EQ(refined[r - 1], BigInt(expected[r - 1]));
    EXPECT_EQ(refined_asm_count(5, r), refined[r - 1]);
  }
  EXPECT_THROW(refined_asm_count(5, 0), std::invalid_argument);
  EXPECT_THROW(refined_asm_count(5, 6), std::invalid_argument);
  const auto summary = monotone_summary(5, true);
  EXPECT_EQ(summary.brute_total, summary.formula_total);
  EXPECT_EQ(summary.refined_brute, summary.refined_formula);
}

TEST(Monotone, WeightedSum) {
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_TRUE(check_An2(n));
    EXPECT_EQ(weighted_monotone_sum(n), BigInt(1) << (n * (n - 1) / 2));
  }
}

TEST(Hearts, CompletionCountsMatchBuckets) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (std::int64_t shift : {0, 2}) {
      const auto top = heart_top_row(r, shift);
      const auto buckets = oracle::heart_buckets(Row(top.begin(), top.end()));
      std::set<Heart> realised;
      for (const auto& [key, n] : buckets) {
        const Heart h{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
        realised.insert(h);
        EXPECT_TRUE(is_valid_heart(h, top));
        EXPECT_EQ(count_with_heart(h, top), BigInt(n));
      }
      const auto poset = heart_poset(r, shift);
      EXPECT_EQ(poset.elements.size(), (r + 1) * (r + 1) * (r + 1));
      EXPECT_EQ(std::set<Heart>(poset.elements.begin(), poset.elements.end()), realised);
    }
  }
  EXPECT_THROW(count_with_heart(Heart{100, 0, 0}, heart_top_row(1)), std::invalid_argument);
}

TEST(Hearts, CoverCounts) {
  const std::vector<std::size_t> expected = {10, 48, 132, 280, 510};
  for (unsigned r = 1; r <= 5; ++r) {
    const auto poset = heart_poset(r);
    EXPECT_EQ(cover_count(poset), expected[r - 1]);
    EXPECT_EQ(cover_count_formula(r), expected[r - 1]);
  }
}

TEST(Sln, CoverRelationsMatchOracle) {
  for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(sln_poset(n).covers.size(), oracle::sln_cover_count(n));
  const std::vector<int> cat = {1, 1, 2, 5, 14, 42, 132};
  for (unsigned n = 0; n < cat.size(); ++n) EXPECT_EQ(catalan(n), BigInt(cat[n]));
}

TEST(Equation, CoefficientsAndFrobenius) {
  EXPECT_EQ(gt_equation(3), (std::vector<std::uint64_t>{4, 12, 8}));
  EXPECT_EQ(gt_equation(4), (std::vector<std::uint64_t>{6, 13, 22, 12}));
  EXPECT_EQ(gt_frobenius(4).value, 33);
  for (unsigned n = 4; n <= 8; ++n) {
    const auto k = gt_equation(n);
    EXPECT_EQ(gt_frobenius(n).value, oracle::largest_unreachable(k, 4000)) << n;
  }
}

TEST(Equation, ReferenceTableAgreementForSmallN) {
  for (const auto& row : gt_frobenius_table(4, 9)) EXPECT_TRUE(row.matches()) << "n=" << row.n;
}

TEST(Sgt, RepresentabilityAndConfiguration) {
  for (unsigned r = 2; r <= 4; ++r) {
    for (const auto& rep : sgt_representability(r)) {
      const auto reach = oracle::reachability(gt_equation(4), rep.value);
      EXPECT_EQ(rep.representable, static_cast<bool>(reach[rep.value]));
    }
    const auto cfg = build_gt_configuration(r);
    EXPECT_EQ(cfg.vertex_count(), 2 * r + 1);
    EXPECT_EQ(cfg.polygon_count(), 2 * r + 1);
    EXPECT_TRUE(classify_vertices(cfg).is_reduced());
  }
}

}  // namespace
}  // namespace brauerlab::gt
