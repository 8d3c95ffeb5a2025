#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "brauerlab/algebra.hpp"
#include "brauerlab/automata.hpp"
#include "brauerlab/error.hpp"
#include "brauerlab/json_io.hpp"

namespace brauerlab::io {
namespace {

const std::string kData = BRAUERLAB_TEST_DATA_DIR;

TEST(Json, ConfigurationRoundTrip) {
  const auto c = load_configuration(kData + "/multiplicity.json");
  const auto back = configuration_from_json(to_json(c));
  EXPECT_EQ(back.vertices(), c.vertices());
  EXPECT_EQ(back.polygons(), c.polygons());
  for (std::size_t v = 0; v < c.vertex_count(); ++v) EXPECT_EQ(back.multiplicity(v), c.multiplicity(v));
  const auto path = (std::filesystem::temp_directory_path() / "brauerlab_roundtrip.json").string();
  save_configuration(c, path);
  EXPECT_EQ(to_json(load_configuration(path)), to_json(c));
  std::filesystem::remove(path);
}

TEST(Json, ConfigurationErrors) {
  EXPECT_THROW(load_configuration(kData + "/malformed.json"), std::invalid_argument);
  EXPECT_THROW(load_configuration(kData + "/absent_vertex.json"), NonReducedError);
  EXPECT_THROW(load_configuration(kData + "/does_not_exist.json"), std::invalid_argument);
  EXPECT_THROW(configuration_from_json(json{{"vertices", {"0"}}, {"polygons", {{"0", "0"}}}, {"multiplicity", {{"9", 2}}}}),
               std::invalid_argument);
}

TEST(Json, SeedRoundTrip) {
  std::ifstream in(kData + "/gf4_seed.json");
  const auto seed = seed_from_json(json::parse(in));
  EXPECT_EQ(seed.word_count(), 2u);
  EXPECT_EQ(seed.width(), 1u);
  const auto again = seed_from_json(to_json(seed));
  EXPECT_EQ(again.words, seed.words);
  EXPECT_EQ(again.scales, seed.scales);
  EXPECT_EQ(again.shifts.rounds, seed.shifts.rounds);
  EXPECT_EQ(again.shifts.cyclic, seed.shifts.cyclic);
}

TEST(Json, ValueRoundTrips) {
  const dioph::DioProblem p{15, 32, {3, 2, 1}, 1};
  EXPECT_EQ(problem_from_json(to_json(p)), p);
  const dioph::DioSolution s{{7, 3, 5}};
  EXPECT_EQ(solution_from_json(to_json(s)), s);
  const dioph::FrobeniusNumber f{true, 0};
  EXPECT_EQ(frobenius_from_json(to_json(f)), f);
  const auto eq = dioph::message_to_diophantine(dioph::hex_to_bits("AFC01310D0B38AF2CEC4623DA274797D"));
  EXPECT_EQ(message_equation_from_json(to_json(eq)), eq);
  const mutation::OrbitReport r{true, 0, 4, 5, ""};
  EXPECT_EQ(orbit_from_json(to_json(r)), r);
  const BigInt big("123456789012345678901234567890");
  EXPECT_EQ(to_json(big), json("123456789012345678901234567890"));
  EXPECT_EQ(bigint_from_json(to_json(big)), big);
  const gt::GTPattern pat{{{3, 1, 0}, {2, 1}, {1}}};
  EXPECT_EQ(pattern_from_json(to_json(pat)), pat);
}

TEST(Json, SummaryAndNfa) {
  const auto c = load_configuration(kData + "/config6.json");
  const auto s = summarize(c, true);
  const auto j = to_json(s);
  EXPECT_EQ(j.at("dimension"), 12);
  EXPECT_EQ(j.at("center_dimension"), 4);
  EXPECT_EQ(to_json(summary_from_json(j)), j);
  const auto n = nfa::build_nfa(c);
  const auto back = nfa_from_json(to_json(n));
  EXPECT_EQ(back.states, n.states);
  EXPECT_EQ(back.letters, n.letters);
  EXPECT_EQ(back.transitions, n.transitions);
  EXPECT_EQ(back.initial, n.initial);
}

TEST(Json, Envelope) {
  const auto e = envelope("dioph frobenius", json{{"value", 43}});
  EXPECT_EQ(e.at("schema"), kSchema);
  EXPECT_EQ(e.at("command"), "dioph frobenius");
  EXPECT_EQ(e.at("result").at("value"), 43);
}

}  // namespace
}  // namespace brauerlab::io
