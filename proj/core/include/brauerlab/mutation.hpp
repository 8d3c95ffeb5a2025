#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauerlab/configuration.hpp"
#include "brauerlab/finite_field.hpp"

namespace brauerlab::mutation {

/// One word x_i of a seed: `width` field elements.
using FieldWord = std::vector<gf::FieldElement>;

/// Per-element transform tau applied by the round function.
enum class RoundKind {
  affine,    // tau_j(y) = lambda_j y
  sbox,      // tau(y) = SubBytes table lookup (degree 8 only)
  identity,  // tau(y) = y
};

/// Round-indexed shift vectors v_{r,0}; round r uses rounds[r - 1]. A cyclic
/// schedule wraps around, a finite one is exhausted after rounds.size().
struct ShiftSchedule {
  std::vector<FieldWord> rounds;
  bool cyclic = false;

  /// nullptr when the schedule is exhausted.
  const FieldWord* at(std::size_t round) const;
};

struct Seed {
  gf::FieldPtr field;
  std::vector<FieldWord> words;  // X = (x_1, ..., x_l)
  FieldWord scales;              // lambda_1..lambda_width, used by RoundKind::affine
  ShiftSchedule shifts;
  RoundKind round = RoundKind::affine;

  std::size_t word_count() const { return words.size(); }
  std::size_t width() const { return words.empty() ? 0 : words.front().size(); }

  /// Throws std::invalid_argument on inconsistent shapes or fields.
  void validate() const;
};

/// The i-th mutation M^i (index 0 is the seed itself).
struct Cluster {
  std::size_t index = 0;
  std::vector<FieldWord> words;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

Cluster initial_cluster(const Seed& seed);

/// H(y_1..y_w) = (tau(y_2), ..., tau(y_w), tau(y_1)).
FieldWord round_function(const Seed& seed, const FieldWord& word);

/// Next cluster: first word = x_1 + H(x_l) + v_r, every later word is the
/// previous new word plus the corresponding old word. round = previous.index + 1.
/// Throws DomainError when the shift schedule is exhausted.
Cluster mutate(const Seed& seed, const Cluster& previous);
/// Cluster M^round, computed from the seed.
Cluster mutate(const Seed& seed, std::size_t round);
/// Clusters M^0 .. M^rounds.
std::vector<Cluster> run(const Seed& seed, std::size_t rounds);

/// Bits of the cluster's message: words in order, each element most
/// significant coefficient first.
std::string cluster_bits(const Cluster& cluster);
std::string cluster_hex(const Cluster& cluster);

/// Phi^{m0}: Gamma_0 = {0, 1}, polygons M(0) < ... < M(m0) spelled as bit
/// sequences, mu = 1. A degenerate run whose messages miss a bit value raises
/// NonReducedError from the configuration validation.
BrauerConfiguration cluster_configuration(const Seed& seed, std::size_t m0);

/// Big-endian element masks concatenated in word order.
std::string canonical_state(const Cluster& cluster);

struct OrbitReport {
  bool determined = false;
  std::size_t preperiod = 0;  // M
  std::size_t period = 0;     // N - M
  std::size_t states_visited = 0;
  std::string reason;         // set when undetermined

  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

/// First (M, N) with state_N = state_M within max_steps mutations. States
/// include the schedule phase when the shift schedule is cyclic of length > 1.
OrbitReport detect_period(const Seed& seed, std::size_t max_steps);

// ---- AES-128 specialisation -------------------------------------------------

const std::array<std::uint8_t, 256>& sbox_table();
std::uint8_t sbox(std::uint8_t byte);

enum class RconVariant {
  standard,  // 01 02 04 08 10 20 40 80 1b 36
  listed,    // 01 02 04 08 10 20 41 81 1b 36
};

const std::array<std::uint8_t, 10>& rcon(RconVariant variant);

/// l = 4 words of 4 bytes over GF(2^8), sbox round function, RCON shifts.
Seed aes_seed(std::span<const std::uint8_t> key, RconVariant variant = RconVariant::standard);

/// w_0..w_43, produced by ten calls to mutate() on aes_seed(key).
std::array<std::uint32_t, 44> aes_key_schedule(std::span<const std::uint8_t> key,
                                               RconVariant variant = RconVariant::standard);

/// Parses whitespace-separated hex tokens into bytes (case-insensitive).
std::vector<std::uint8_t> parse_hex_bytes(const std::string& text);

// ---- Dimension sampler -------------------------------------------------------

struct IntervalStats {
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  double mean = 0.0;
  std::uint64_t lower = 0;  // empirical 0.5% quantile
  std::uint64_t upper = 0;  // empirical 99.5% quantile

  /// Fraction of samples inside [lo, hi].
  double fraction_in(std::uint64_t lo, std::uint64_t hi) const;
  /// Length of [lower, upper] intersected with [lo, hi]; 0 when disjoint.
  std::uint64_t overlap(std::uint64_t lo, std::uint64_t hi) const;

  std::vector<std::uint64_t> samples;
};

struct DimensionEstimate {
  std::size_t m0 = 0;
  std::size_t sample_count = 0;
  std::uint64_t rng_seed = 0;
  IntervalStats dim;
  IntervalStats center;
};

/// Random AES seeds (uniform 16-byte keys drawn from mt19937_64(rng_seed)),
/// dimension and center dimension of Lambda_{Phi^{m0}} per sample.
DimensionEstimate estimate_dimensions(std::size_t m0, std::size_t sample_count, std::uint64_t rng_seed);

}  // namespace brauerlab::mutation
