#include "brauerlab/diophantine.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "brauerlab/error.hpp"

namespace brauerlab::dioph {
namespace {

void check_generators(std::span<const std::uint64_t> gens) {
  if (gens.empty()) throw std::invalid_argument("generator list is empty");
  for (auto g : gens) {
    if (g == 0) throw std::invalid_argument("generators must be positive");
  }
}

std::uint64_t gcd_of(std::span<const std::uint64_t> gens) {
  std::uint64_t g = 0;
  for (auto x : gens) g = std::gcd(g, x);
  return g;
}

}  // namespace

bool is_numerical_semigroup(std::span<const std::uint64_t> gens) {
  check_generators(gens);
  return gcd_of(gens) == 1;
}

std::string to_string(const FrobeniusNumber& f) {
  return f.infinite ? std::string("infinity") : std::to_string(f.value);
}

std::vector<std::optional<std::uint64_t>> residue_table(std::span<const std::uint64_t> gens) {
  check_generators(gens);
  const std::uint64_t m = *std::min_element(gens.begin(), gens.end());
  std::vector<std::optional<std::uint64_t>> reach(m);
  using Entry = std::pair<std::uint64_t, std::uint64_t>;  // (value, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  reach[0] = 0;
  queue.push({0, 0});
  while (!queue.empty()) {
    const auto [value, residue] = queue.top();
    queue.pop();
    if (reach[residue] && *reach[residue] < value) continue;
    for (auto g : gens) {
      const std::uint64_t next = value + g;
      const std::uint64_t r = next % m;
      if (!reach[r] || next < *reach[r]) {
        reach[r] = next;
        queue.push({next, r});
      }
    }
  }
  return reach;
}

FrobeniusNumber frobenius(std::span<const std::uint64_t> gens) {
  check_generators(gens);
  if (gcd_of(gens) != 1) return {true, 0};
  const std::uint64_t m = *std::min_element(gens.begin(), gens.end());
  if (m == 1) return {false, -1};
  std::uint64_t largest = 0;
  for (const auto& r : residue_table(gens)) largest = std::max(largest, *r);
  return {false, static_cast<std::int64_t>(largest) - static_cast<std::int64_t>(m)};
}

std::vector<std::uint64_t> gaps(std::span<const std::uint64_t> gens) {
  if (!is_numerical_semigroup(gens)) throw DomainError("gaps require generators with gcd 1");
  const std::uint64_t m = *std::min_element(gens.begin(), gens.end());
  const auto table = residue_table(gens);
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < m; ++r) {
    for (std::uint64_t x = r; x < *table[r]; x += m) {
      if (x > 0) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> irreducibles(std::span<const std::uint64_t> gens) {
  check_generators(gens);
  std::vector<std::uint64_t> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<bool> reachable(sorted.back() + 1, false);
  reachable[0] = true;
  std::vector<std::uint64_t> minimal;
  for (auto g : sorted) {
    if (reachable[g]) continue;
    minimal.push_back(g);
    for (std::uint64_t x = g; x < reachable.size(); ++x) {
      if (reachable[x - g]) reachable[x] = true;
    }
  }
  return minimal;
}

std::vector<BigInt> denumerant_series(std::span<const std::uint64_t> coins, std::uint64_t max_b) {
  check_generators(coins);
  std::vector<BigInt> series(max_b + 1, 0);
  series[0] = 1;
  for (auto c : coins) {
    for (std::uint64_t i = c; i <= max_b; ++i) series[i] += series[i - c];
  }
  return series;
}

BigInt denumerant(std::span<const std::uint64_t> coins, std::uint64_t b) {
  return denumerant_series(coins, b)[b];
}

void DioProblem::validate() const {
  if (k.empty()) throw std::invalid_argument("D(n1, n2, K) needs at least one coefficient");
  for (auto x : k) {
    if (x == 0) throw std::invalid_argument("coefficients k_i must be positive");
  }
  if (lower_bound > 1) throw std::invalid_argument("lower bound must be 0 or 1");
}

std::string to_string(const DioProblem& problem) {
  std::string ks;
  for (auto x : problem.k) ks += (ks.empty() ? "" : ",") + std::to_string(x);
  return "D(" + std::to_string(problem.n1) + ", " + std::to_string(problem.n2) + ", {" + ks + "})";
}

std::string to_string(const DioSolution& solution) {
  std::string out;
  for (auto x : solution.lambdas) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

bool satisfies(const DioProblem& problem, const DioSolution& solution) {
  if (solution.lambdas.size() != problem.k.size()) return false;
  std::uint64_t sum = 0;
  std::uint64_t weighted = 0;
  for (std::size_t i = 0; i < problem.k.size(); ++i) {
    if (solution.lambdas[i] < problem.lower_bound) return false;
    sum += solution.lambdas[i];
    weighted += problem.k[i] * solution.lambdas[i];
  }
  return sum == problem.n1 && weighted == problem.n2;
}

namespace {

// Suffix data for pruning: for variables i..m-1.
struct Suffix {
  std::vector<std::uint64_t> count, ksum, kmin, kmax;

  explicit Suffix(const std::vector<std::uint64_t>& k) {
    const std::size_t m = k.size();
    count.assign(m + 1, 0);
    ksum.assign(m + 1, 0);
    kmin.assign(m + 1, UINT64_MAX);
    kmax.assign(m + 1, 0);
    for (std::size_t i = m; i-- > 0;) {
      count[i] = count[i + 1] + 1;
      ksum[i] = ksum[i + 1] + k[i];
      kmin[i] = std::min(kmin[i + 1], k[i]);
      kmax[i] = std::max(kmax[i + 1], k[i]);
    }
  }
};

// Can variables i.. reach remaining sum `rest` and weighted sum `weight`?
bool feasible(const Suffix& s, std::size_t i, unsigned lb, std::uint64_t rest, std::uint64_t weight) {
  const std::uint64_t base = lb * s.count[i];
  if (rest < base) return false;
  const std::uint64_t free = rest - base;
  const std::uint64_t floor = lb * s.ksum[i];
  if (weight < floor) return false;
  return weight - floor >= free * s.kmin[i] && weight - floor <= free * s.kmax[i];
}

}  // namespace

void for_each_solution(const DioProblem& problem, const std::function<bool(const DioSolution&)>& visit) {
  problem.validate();
  const Suffix suffix(problem.k);
  const std::size_t m = problem.k.size();
  const unsigned lb = problem.lower_bound;
  DioSolution current{std::vector<std::uint64_t>(m, 0)};
  bool stop = false;

  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> dfs =
      [&](std::size_t i, std::uint64_t rest, std::uint64_t weight) {
        if (stop) return;
        if (i + 1 == m) {
          if (rest >= lb && problem.k[i] * rest == weight) {
            current.lambdas[i] = rest;
            if (!visit(current)) stop = true;
          }
          return;
        }
        for (std::uint64_t x = lb; x <= rest && problem.k[i] * x <= weight; ++x) {
          if (!feasible(suffix, i + 1, lb, rest - x, weight - problem.k[i] * x)) continue;
          current.lambdas[i] = x;
          dfs(i + 1, rest - x, weight - problem.k[i] * x);
          if (stop) return;
        }
      };
  if (feasible(suffix, 0, lb, problem.n1, problem.n2)) dfs(0, problem.n1, problem.n2);
}

SolveResult solve(const DioProblem& problem, SolveMode mode) {
  SolveResult result;
  if (mode == SolveMode::count) {
    problem.validate();
    const Suffix suffix(problem.k);
    const std::size_t m = problem.k.size();
    const unsigned lb = problem.lower_bound;
    std::map<std::tuple<std::size_t, std::uint64_t, std::uint64_t>, BigInt> memo;
    std::function<BigInt(std::size_t, std::uint64_t, std::uint64_t)> count =
        [&](std::size_t i, std::uint64_t rest, std::uint64_t weight) -> BigInt {
      if (!feasible(suffix, i, lb, rest, weight)) return 0;
      if (i + 1 == m) return problem.k[i] * rest == weight ? 1 : 0;
      const auto key = std::make_tuple(i, rest, weight);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      BigInt total = 0;
      for (std::uint64_t x = lb; x <= rest && problem.k[i] * x <= weight; ++x) {
        total += count(i + 1, rest - x, weight - problem.k[i] * x);
      }
      memo.emplace(key, total);
      return total;
    };
    result.count = count(0, problem.n1, problem.n2);
    return result;
  }
  for_each_solution(problem, [&](const DioSolution& s) {
    result.solutions.push_back(s);
    return mode == SolveMode::all;
  });
  result.count = result.solutions.size();
  return result;
}

std::pair<DioProblem, DioSolution> reverse_solution(const DioProblem& problem, const DioSolution& solution) {
  const std::uint64_t m = problem.k.size();
  for (std::uint64_t i = 0; i < m; ++i) {
    if (problem.k[i] != i + 1) throw std::invalid_argument("reversal requires K = (1, 2, ..., m)");
  }
  if (!satisfies(problem, solution)) throw std::invalid_argument("tuple does not solve " + to_string(problem));
  DioProblem reversed = problem;
  reversed.n2 = (m + 1) * problem.n1 - problem.n2;
  DioSolution out{std::vector<std::uint64_t>(solution.lambdas.rbegin(), solution.lambdas.rend())};
  return {reversed, out};
}

FeasibilityWindow feasibility_window(std::uint64_t n1, std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  FeasibilityWindow w;
  const std::uint64_t below = m * (m - 1) / 2;
  w.printed_hi = static_cast<std::int64_t>(m * n1) - static_cast<std::int64_t>(m * (m + 1) / 2);
  if (n1 < m) {
    w.empty = true;
    return w;
  }
  w.lo = n1 + below;
  w.hi = m * n1 - below;
  return w;
}

std::string to_string(const ValencyProfile& profile, bool uppercase) {
  const char* digits = uppercase ? "0123456789ABCDEF" : "0123456789abcdef";
  std::string out;
  for (const auto& c : profile.classes) {
    out += '(';
    for (auto s : c.symbols) out += digits[s];
    out += ")^" + std::to_string(c.valency);
  }
  return out;
}

MessageEquation message_to_diophantine(std::string_view bits, unsigned l, unsigned n) {
  if (bits.empty()) throw std::invalid_argument("message is empty");
  if (bits.size() % 4 != 0) throw std::invalid_argument("message length must be a multiple of 4 bits");
  std::array<std::uint64_t, 16> count{};
  std::vector<std::uint8_t> first_seen;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    std::uint8_t nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      const char c = bits[i + j];
      if (c != '0' && c != '1') throw std::invalid_argument("message must consist of 0/1 characters");
      nibble = static_cast<std::uint8_t>((nibble << 1) | (c == '1'));
    }
    if (count[nibble]++ == 0) first_seen.push_back(nibble);
  }

  std::vector<std::uint64_t> valencies;
  for (auto s : first_seen) valencies.push_back(count[s]);
  std::sort(valencies.begin(), valencies.end(), std::greater<>());
  valencies.erase(std::unique(valencies.begin(), valencies.end()), valencies.end());

  MessageEquation eq;
  eq.profile.total_letters = bits.size() / 4;
  for (auto v : valencies) {
    ValencyClass c{v, {}};
    for (auto s : first_seen) {
      if (count[s] == v) c.symbols.push_back(s);
    }
    eq.problem.k.push_back(v);
    eq.solution.lambdas.push_back(c.size());
    eq.profile.classes.push_back(std::move(c));
  }
  eq.problem.n1 = first_seen.size();
  eq.problem.n2 = eq.profile.total_letters;
  eq.problem.lower_bound = 1;
  eq.formula_n2 = std::uint64_t{l} * l * (n >= 2 ? (std::uint64_t{1} << (n - 2)) : 1);
  return eq;
}

std::string hex_to_bits(std::string_view hex) {
  std::string bits;
  for (char c : hex) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isxdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
    }
    const int v = std::stoi(std::string(1, c), nullptr, 16);
    for (int j = 3; j >= 0; --j) bits += ((v >> j) & 1) ? '1' : '0';
  }
  return bits;
}

}  // namespace brauerlab::dioph
