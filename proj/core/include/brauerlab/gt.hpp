#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "brauerlab/bigint.hpp"
#include "brauerlab/configuration.hpp"
#include "brauerlab/diophantine.hpp"

namespace brauerlab::gt {

using Row = std::vector<std::int64_t>;

/// Rows of lengths n, n-1, ..., 1, top row first.
struct GTPattern {
  std::vector<Row> rows;

  std::size_t size() const { return rows.empty() ? 0 : rows.front().size(); }
  /// Row shapes and the interlacing row[k][i] >= row[k+1][i] >= row[k][i+1].
  bool is_valid() const;
  friend bool operator==(const GTPattern&, const GTPattern&) = default;
};

/// Top row lambda and optional content mu, where mu_j is the sum of the row
/// of length j minus the sum of the row of length j - 1.
struct GTWeightSpec {
  Row top_row;
  std::optional<std::vector<std::int64_t>> content;

  /// Throws std::invalid_argument for an empty or increasing top row, or a
  /// content vector of the wrong length.
  void validate() const;
};

BigInt count_patterns(const GTWeightSpec& spec);
/// Depth-first, row by row; each row in lexicographic order. The callback
/// returns false to stop.
void for_each_pattern(const GTWeightSpec& spec, const std::function<bool(const GTPattern&)>& visit);
std::vector<GTPattern> list_patterns(const GTWeightSpec& spec);

/// (r+1)^{n(n-1)/2}.
BigInt gt_count_formula(unsigned n, unsigned r);
/// (lambda_1, lambda_1 - r, ..., lambda_1 - (n-1) r) with lambda_1 = (n-1) r + shift.
Row spaced_top_row(unsigned n, unsigned r, std::int64_t shift = 0);

// ---- Monotone triangles -------------------------------------------------------

/// Top row 1..n, rows strictly increasing, each entry between its two upper
/// neighbours (weakly). Stored top row first; the apex is rows.back()[0].
std::vector<GTPattern> monotone_triangles(unsigned n);
BigInt monotone_count(unsigned n);
/// Brute-force counts by apex value 1..n.
std::vector<BigInt> refined_monotone_counts(unsigned n);

/// prod_{i=0}^{n-1} (3i+1)! / (n+i)!.
BigInt asm_count(unsigned n);
/// A_n C(n+r-2, r-1) C(2n-r-1, n-r) / C(3n-2, n-1). Throws for r outside 1..n.
BigInt refined_asm_count(unsigned n, unsigned r);

struct MonotoneCounts {
  unsigned n = 0;
  BigInt brute_total = 0;
  BigInt formula_total = 0;
  std::vector<BigInt> refined_brute;    // filled when requested
  std::vector<BigInt> refined_formula;
};

MonotoneCounts monotone_summary(unsigned n, bool refined);

/// Number of entries strictly between their two upper neighbours.
unsigned standard_statistic(const GTPattern& triangle);
/// sum over monotone triangles of length n of 2^{s(T)}.
BigInt weighted_monotone_sum(unsigned n);
/// weighted_monotone_sum(n) == 2^{n(n-1)/2}.
bool check_An2(unsigned n);

// ---- Hearts (n = 4) -------------------------------------------------------------

using TopRow4 = std::array<std::int64_t, 4>;

/// (lambda_(3,1), lambda_(3,2), lambda_(2,1)).
struct Heart {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  friend bool operator==(const Heart&, const Heart&) = default;
  friend auto operator<=>(const Heart&, const Heart&) = default;
};

/// (3r + shift, 2r + shift, r + shift, shift).
TopRow4 heart_top_row(unsigned r, std::int64_t shift = 0);
bool is_valid_heart(const Heart& heart, const TopRow4& top);
/// Completions (lambda_(3,3), lambda_(2,2), lambda_(1,1)) of the heart.
/// Throws std::invalid_argument for an invalid heart or a non-decreasing top row.
BigInt count_with_heart(const Heart& heart, const TopRow4& top);

struct HeartPoset {
  unsigned r = 0;
  TopRow4 top{};
  std::vector<Heart> elements;                           // ascending
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper) indices
};

/// Throws std::invalid_argument for r == 0.
HeartPoset heart_poset(unsigned r, std::int64_t shift = 0);
std::size_t cover_count(const HeartPoset& poset);
/// r(r+1)(3r+2).
std::uint64_t cover_count_formula(unsigned r);

// ---- Marked order / chain polytopes of sl_n ---------------------------------

struct FacetCounts {
  std::uint64_t order = 0;  // n(n+1)
  BigInt chain = 0;         // n(n-1)/2 + sum_{i=1}^n i C_{n-i}
};

FacetCounts sln_facet_formulas(unsigned n);
BigInt catalan(unsigned n);

/// The GT poset with a marked top row of n+1 elements: x_(i,j) lies below
/// x_(i+1,j) and x_(i+1,j+1). Relations are generated with their transitive
/// consequences and reduced back to covers.
struct SlnPoset {
  unsigned n = 0;
  std::size_t element_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

SlnPoset sln_poset(unsigned n);

// ---- gt(n) equations --------------------------------------------------------

/// Throws std::invalid_argument for n < 3.
std::vector<std::uint64_t> gt_equation(unsigned n);
dioph::FrobeniusNumber gt_frobenius(unsigned n);
/// Reference table for n = 4..12; nullopt elsewhere.
std::optional<dioph::FrobeniusNumber> reference_gt_frobenius(unsigned n);

struct GtFrobeniusRow {
  unsigned n = 0;
  std::vector<std::uint64_t> coefficients;
  dioph::FrobeniusNumber computed;
  std::optional<dioph::FrobeniusNumber> reference;
  bool matches() const { return reference.has_value() && *reference == computed; }
};

std::vector<GtFrobeniusRow> gt_frobenius_table(unsigned n_min, unsigned n_max);

// ---- S_gt numbers -----------------------------------------------------------

/// (q_1, ..., q_{2r+1}). Middle indices continue the listed progression.
/// Throws std::invalid_argument for r < 2.
std::vector<std::uint64_t> sgt_coefficients(unsigned r);
/// n1 q_1 + q_2 + ... + q_{2r+1}.
std::uint64_t sgt_sum(std::uint64_t n1, unsigned r);

struct SgtRepresentation {
  std::uint64_t n1 = 0;
  std::uint64_t value = 0;
  bool representable = false;
};

/// S_gt(n1, r) for n1 = 1..r+1, checked against the semigroup of gt(n).
std::vector<SgtRepresentation> sgt_representability(unsigned r, unsigned n = 4);

/// Vertices q1..q{2r+1}; 2r+1 polygons each holding every vertex once; mu = 1.
BrauerConfiguration build_gt_configuration(unsigned r);

}  // namespace brauerlab::gt
