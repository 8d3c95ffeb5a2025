#include "brauerlab/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "brauerlab/algebra.hpp"
#include "brauerlab/error.hpp"

namespace brauerlab::mutation {

const FieldWord* ShiftSchedule::at(std::size_t round) const {
  if (round == 0 || rounds.empty()) return nullptr;
  const std::size_t index = round - 1;
  if (cyclic) return &rounds[index % rounds.size()];
  return index < rounds.size() ? &rounds[index] : nullptr;
}

void Seed::validate() const {
  if (!field) throw std::invalid_argument("seed has no field");
  if (words.empty()) throw std::invalid_argument("seed needs at least one word");
  const std::size_t w = width();
  if (w == 0) throw std::invalid_argument("seed words must be nonempty");
  auto check_word = [&](const FieldWord& word, const char* what) {
    if (word.size() != w) throw std::invalid_argument(std::string(what) + " has the wrong width");
    for (const auto& e : word) {
      if (!(e.spec() == *field)) throw std::invalid_argument(std::string(what) + " uses another field");
    }
  };
  for (const auto& word : words) check_word(word, "seed word");
  for (const auto& shift : shifts.rounds) check_word(shift, "shift vector");
  if (round == RoundKind::affine) check_word(scales, "scale vector");
  if (round == RoundKind::sbox && field->degree() != 8) {
    throw std::invalid_argument("the sbox round function needs GF(2^8)");
  }
}

Cluster initial_cluster(const Seed& seed) {
  seed.validate();
  return Cluster{0, seed.words};
}

FieldWord round_function(const Seed& seed, const FieldWord& word) {
  const std::size_t w = word.size();
  FieldWord out;
  out.reserve(w);
  for (std::size_t j = 0; j < w; ++j) {
    const gf::FieldElement& y = word[(j + 1) % w];
    switch (seed.round) {
      case RoundKind::affine: out.push_back(seed.scales.at(j) * y); break;
      case RoundKind::sbox: out.emplace_back(y.spec_ptr(), sbox(static_cast<std::uint8_t>(y.bits()))); break;
      case RoundKind::identity: out.push_back(y); break;
    }
  }
  return out;
}

namespace {

FieldWord add_words(const FieldWord& a, const FieldWord& b) {
  FieldWord out;
  out.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a[j] + b[j]);
  return out;
}

}  // namespace

Cluster mutate(const Seed& seed, const Cluster& previous) {
  const std::size_t round = previous.index + 1;
  const FieldWord* shift = seed.shifts.at(round);
  if (shift == nullptr) {
    throw DomainError("shift schedule exhausted: no shift vector for round " + std::to_string(round));
  }
  const auto& old = previous.words;
  Cluster next{round, {}};
  next.words.reserve(old.size());
  next.words.push_back(add_words(add_words(old.front(), round_function(seed, old.back())), *shift));
  for (std::size_t k = 1; k < old.size(); ++k) next.words.push_back(add_words(next.words.back(), old[k]));
  return next;
}

Cluster mutate(const Seed& seed, std::size_t round) {
  Cluster c = initial_cluster(seed);
  while (c.index < round) c = mutate(seed, c);
  return c;
}

std::vector<Cluster> run(const Seed& seed, std::size_t rounds) {
  std::vector<Cluster> out{initial_cluster(seed)};
  out.reserve(rounds + 1);
  while (out.size() <= rounds) out.push_back(mutate(seed, out.back()));
  return out;
}

std::string cluster_bits(const Cluster& cluster) {
  std::string bits;
  for (const auto& word : cluster.words) {
    for (const auto& e : word) {
      for (unsigned j = e.spec().degree(); j-- > 0;) bits += e.coefficient(j) ? '1' : '0';
    }
  }
  return bits;
}

std::string cluster_hex(const Cluster& cluster) {
  std::string out;
  for (const auto& word : cluster.words) {
    for (const auto& e : word) out += gf::to_hex(e);
  }
  return out;
}

BrauerConfiguration cluster_configuration(const Seed& seed, std::size_t m0) {
  if (m0 < 1) throw std::invalid_argument("m0 must be at least 1");
  std::vector<std::vector<Vertex>> polygons;
  for (const auto& cluster : run(seed, m0)) {
    std::vector<Vertex> letters;
    for (char bit : cluster_bits(cluster)) letters.emplace_back(1, bit);
    polygons.push_back(std::move(letters));
  }
  return BrauerConfiguration({"0", "1"}, std::move(polygons), {{"0", 1}, {"1", 1}});
}

std::string canonical_state(const Cluster& cluster) {
  std::string key;
  for (const auto& word : cluster.words) {
    for (const auto& e : word) {
      key += static_cast<char>((e.bits() >> 8) & 0xFF);
      key += static_cast<char>(e.bits() & 0xFF);
    }
  }
  return key;
}

OrbitReport detect_period(const Seed& seed, std::size_t max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  const bool phased = seed.shifts.cyclic && seed.shifts.rounds.size() > 1;
  auto key_of = [&](const Cluster& c) {
    std::string key = canonical_state(c);
    if (phased) key += "#" + std::to_string(c.index % seed.shifts.rounds.size());
    return key;
  };

  std::map<std::string, std::size_t> seen;
  Cluster current = initial_cluster(seed);
  seen.emplace(key_of(current), 0);
  for (std::size_t step = 1; step <= max_steps; ++step) {
    if (seed.shifts.at(step) == nullptr) {
      return {false, 0, 0, seen.size(),
              "undetermined: shift schedule exhausted after " + std::to_string(step - 1) + " rounds"};
    }
    current = mutate(seed, current);
    const auto [it, inserted] = seen.emplace(key_of(current), step);
    if (!inserted) return {true, it->second, step - it->second, seen.size(), ""};
  }
  return {false, 0, 0, seen.size(),
          "undetermined: no repeat within " + std::to_string(max_steps) + " steps"};
}

double IntervalStats::fraction_in(std::uint64_t lo, std::uint64_t hi) const {
  if (samples.empty()) return 0.0;
  const auto inside = std::count_if(samples.begin(), samples.end(),
                                    [&](std::uint64_t s) { return lo <= s && s <= hi; });
  return static_cast<double>(inside) / static_cast<double>(samples.size());
}

std::uint64_t IntervalStats::overlap(std::uint64_t lo, std::uint64_t hi) const {
  const std::uint64_t a = std::max(lower, lo);
  const std::uint64_t b = std::min(upper, hi);
  return a <= b ? b - a + 1 : 0;
}

namespace {

IntervalStats make_stats(std::vector<std::uint64_t> values) {
  IntervalStats s;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  s.min = values.front();
  s.max = values.back();
  long double total = 0;
  for (auto v : values) total += v;
  s.mean = static_cast<double>(total / n);
  const auto lo_index = static_cast<std::size_t>(std::floor(0.005 * static_cast<double>(n - 1)));
  const auto hi_index = static_cast<std::size_t>(std::ceil(0.995 * static_cast<double>(n - 1)));
  s.lower = values[lo_index];
  s.upper = values[hi_index];
  s.samples = std::move(values);
  return s;
}

}  // namespace

DimensionEstimate estimate_dimensions(std::size_t m0, std::size_t sample_count, std::uint64_t rng_seed) {
  if (sample_count < 1) throw std::invalid_argument("sample_count must be at least 1");
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> byte(0, 255);
  std::vector<std::uint64_t> dims;
  std::vector<std::uint64_t> centers;
  dims.reserve(sample_count);
  centers.reserve(sample_count);
  std::vector<std::uint8_t> key(16);
  for (std::size_t i = 0; i < sample_count; ++i) {
    for (auto& b : key) b = static_cast<std::uint8_t>(byte(rng));
    const auto config = cluster_configuration(aes_seed(key), m0);
    const auto quiver = build_quiver(config);
    dims.push_back(dimension(config));
    centers.push_back(static_cast<std::uint64_t>(center_dimension(config, quiver)));
  }
  return {m0, sample_count, rng_seed, make_stats(std::move(dims)), make_stats(std::move(centers))};
}

}  // namespace brauerlab::mutation
