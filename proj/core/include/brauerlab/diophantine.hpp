#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauerlab/bigint.hpp"

namespace brauerlab::dioph {

// ---- Numerical semigroups -----------------------------------------------------

/// gcd(gens) == 1. Throws std::invalid_argument for an empty or zero-containing list.
bool is_numerical_semigroup(std::span<const std::uint64_t> gens);

/// F(<gens>): `infinite` when gcd > 1, value -1 when 1 is a generator.
struct FrobeniusNumber {
  bool infinite = false;
  std::int64_t value = 0;

  friend bool operator==(const FrobeniusNumber&, const FrobeniusNumber&) = default;
};

std::string to_string(const FrobeniusNumber& f);

/// Smallest representable element in each residue class modulo min(gens)
/// (the Apery set of the least generator). Unreachable classes are nullopt.
std::vector<std::optional<std::uint64_t>> residue_table(std::span<const std::uint64_t> gens);

FrobeniusNumber frobenius(std::span<const std::uint64_t> gens);

/// Positive non-representable integers, ascending. Requires gcd == 1.
std::vector<std::uint64_t> gaps(std::span<const std::uint64_t> gens);

/// Minimal generating set: the distinct generators not representable by the others.
std::vector<std::uint64_t> irreducibles(std::span<const std::uint64_t> gens);

/// Number of nonnegative solutions of sum coins_i x_i = b.
BigInt denumerant(std::span<const std::uint64_t> coins, std::uint64_t b);
/// Coefficients 0..max_b of 1 / prod (1 - t^{coin}).
std::vector<BigInt> denumerant_series(std::span<const std::uint64_t> coins, std::uint64_t max_b);

// ---- D(n1, n2, K) -----------------------------------------------------------

/// sum lambda_i = n1, sum k_i lambda_i = n2, lambda_i >= lower_bound.
struct DioProblem {
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::vector<std::uint64_t> k;
  unsigned lower_bound = 0;

  void validate() const;
  friend bool operator==(const DioProblem&, const DioProblem&) = default;
};

std::string to_string(const DioProblem& problem);

struct DioSolution {
  std::vector<std::uint64_t> lambdas;

  friend bool operator==(const DioSolution&, const DioSolution&) = default;
  friend auto operator<=>(const DioSolution&, const DioSolution&) = default;
};

/// Comma-separated tuple, e.g. "7,3,5".
std::string to_string(const DioSolution& solution);

bool satisfies(const DioProblem& problem, const DioSolution& solution);

enum class SolveMode { first, all, count };

struct SolveResult {
  std::vector<DioSolution> solutions;  // empty in count mode
  BigInt count = 0;
};

/// Depth-first search with prefix-sum pruning; solutions in lexicographic order.
/// The callback returns false to stop early.
void for_each_solution(const DioProblem& problem, const std::function<bool(const DioSolution&)>& visit);

SolveResult solve(const DioProblem& problem, SolveMode mode);

/// Requires K = (1, 2, ..., m). Returns D(n1, (m+1) n1 - n2, K) with the reversed tuple.
std::pair<DioProblem, DioSolution> reverse_solution(const DioProblem& problem, const DioSolution& solution);

/// Values of n2 for which D(n1, n2, (1..m)) with lambda_i >= 1 is solvable.
struct FeasibilityWindow {
  bool empty = false;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::int64_t printed_hi = 0;  // m n1 - m(m+1)/2, the competing upper bound

  bool contains(std::uint64_t n2) const { return !empty && lo <= n2 && n2 <= hi; }
  bool bounds_differ() const { return static_cast<std::int64_t>(hi) != printed_hi; }
};

FeasibilityWindow feasibility_window(std::uint64_t n1, std::uint64_t m);

// ---- Messages as diophantine systems ------------------------------------------

struct ValencyClass {
  std::uint64_t valency = 0;
  std::vector<std::uint8_t> symbols;  // hex digits, order of first appearance

  std::uint64_t size() const { return symbols.size(); }
  friend bool operator==(const ValencyClass&, const ValencyClass&) = default;
};

/// Symbols grouped by valency, classes in decreasing valency.
struct ValencyProfile {
  std::vector<ValencyClass> classes;
  std::uint64_t total_letters = 0;

  friend bool operator==(const ValencyProfile&, const ValencyProfile&) = default;
};

/// e.g. "(ac03d27)^3(f14)^2(b8e69)^1" (uppercase when requested).
std::string to_string(const ValencyProfile& profile, bool uppercase = false);

struct MessageEquation {
  ValencyProfile profile;
  DioProblem problem;       // D(n1 = #symbols, n2 = #nibbles, K = valencies), lower bound 1
  DioSolution solution;     // class sizes
  std::uint64_t formula_n2 = 0;  // l^2 2^{n-2}, reported for comparison with problem.n2

  friend bool operator==(const MessageEquation&, const MessageEquation&) = default;
};

/// Groups a bit string into hex nibbles. Throws std::invalid_argument when the
/// length is not a multiple of 4 or a character is not 0/1.
MessageEquation message_to_diophantine(std::string_view bits, unsigned l = 4, unsigned n = 8);

std::string hex_to_bits(std::string_view hex);

}  // namespace brauerlab::dioph
