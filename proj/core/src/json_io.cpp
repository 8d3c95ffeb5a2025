#include "brauerlab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace brauerlab::io {
namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + ": " + e.what());
  }
}

const char* round_name(mutation::RoundKind k) {
  switch (k) {
    case mutation::RoundKind::affine: return "affine";
    case mutation::RoundKind::sbox: return "sbox";
    case mutation::RoundKind::identity: return "identity";
  }
  return "affine";
}

mutation::RoundKind round_from(const std::string& name) {
  if (name == "affine") return mutation::RoundKind::affine;
  if (name == "sbox") return mutation::RoundKind::sbox;
  if (name == "identity") return mutation::RoundKind::identity;
  throw std::invalid_argument("unknown round kind '" + name + "'");
}

json word_to_json(const mutation::FieldWord& word) {
  json out = json::array();
  for (const auto& e : word) out.push_back(e.bits());
  return out;
}

mutation::FieldWord word_from_json(const gf::FieldPtr& field, const json& j) {
  mutation::FieldWord word;
  for (const auto& e : j) word.emplace_back(field, e.get<std::uint32_t>());
  return word;
}

}  // namespace

json envelope(const std::string& command, json result) {
  return json{{"schema", kSchema}, {"command", command}, {"result", std::move(result)}};
}

json to_json(const BrauerConfiguration& config) {
  json mult = json::object();
  for (const auto& [v, m] : config.multiplicity_map()) mult[v] = m;
  return json{{"vertices", config.vertices()}, {"polygons", config.polygons()}, {"multiplicity", mult}};
}

BrauerConfiguration configuration_from_json(const json& j) {
  auto parts = guarded("configuration", [&] {
    if (!j.is_object()) throw std::invalid_argument("configuration must be a JSON object");
    auto vertices = j.at("vertices").get<std::vector<Vertex>>();
    auto polygons = j.at("polygons").get<std::vector<std::vector<Vertex>>>();
    std::map<Vertex, unsigned> mult;
    if (j.contains("multiplicity")) {
      for (const auto& [v, m] : j.at("multiplicity").items()) {
        if (!m.is_number_integer() || m.get<long long>() < 1) {
          throw std::invalid_argument("multiplicity of '" + v + "' must be a positive integer");
        }
        mult[v] = m.get<unsigned>();
      }
    }
    return std::make_tuple(std::move(vertices), std::move(polygons), std::move(mult));
  });
  for (const auto& [v, m] : std::get<2>(parts)) {
    if (std::find(std::get<0>(parts).begin(), std::get<0>(parts).end(), v) == std::get<0>(parts).end()) {
      throw std::invalid_argument("multiplicity given for unknown vertex '" + v + "'");
    }
  }
  return BrauerConfiguration(std::move(std::get<0>(parts)), std::move(std::get<1>(parts)), std::move(std::get<2>(parts)));
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

BrauerConfiguration load_configuration(const std::string& path) {
  return configuration_from_json(read_json_file(path));
}

void save_configuration(const BrauerConfiguration& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << to_json(config).dump(2) << '\n';
}

json to_json(const mutation::Seed& seed) {
  json words = json::array();
  for (const auto& w : seed.words) words.push_back(word_to_json(w));
  json shifts = json::array();
  for (const auto& w : seed.shifts.rounds) shifts.push_back(word_to_json(w));
  return json{{"degree", seed.field->degree()},
              {"modulus", seed.field->modulus()},
              {"words", words},
              {"round", round_name(seed.round)},
              {"scales", word_to_json(seed.scales)},
              {"shifts", shifts},
              {"cyclic", seed.shifts.cyclic}};
}

mutation::Seed seed_from_json(const json& j) {
  return guarded("seed", [&] {
    mutation::Seed seed;
    seed.field = gf::make_field(j.at("degree").get<unsigned>(), j.at("modulus").get<std::uint32_t>());
    for (const auto& w : j.at("words")) seed.words.push_back(word_from_json(seed.field, w));
    seed.round = round_from(j.value("round", std::string("affine")));
    if (j.contains("scales")) {
      seed.scales = word_from_json(seed.field, j.at("scales"));
    } else {
      seed.scales.assign(seed.width(), gf::FieldElement::one(seed.field));
    }
    if (j.contains("shifts")) {
      for (const auto& w : j.at("shifts")) seed.shifts.rounds.push_back(word_from_json(seed.field, w));
    }
    seed.shifts.cyclic = j.value("cyclic", false);
    seed.validate();
    return seed;
  });
}

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

json to_json(const AlgebraSummary& s) {
  return json{{"nodes", s.nodes},           {"arrows", s.arrows},
              {"loops", s.loops},           {"dimension", s.dim},
              {"center_dimension", optional_json(s.center_dim)},
              {"grading", optional_json(s.graded)},
              {"basis_size", optional_json(s.basis_size)}};
}

AlgebraSummary summary_from_json(const json& j) {
  return guarded("algebra summary", [&] {
    AlgebraSummary s;
    s.nodes = j.at("nodes").get<std::size_t>();
    s.arrows = j.at("arrows").get<std::size_t>();
    s.loops = j.at("loops").get<std::size_t>();
    s.dim = j.at("dimension").get<std::uint64_t>();
    s.center_dim = optional_from<std::int64_t>(j, "center_dimension");
    s.graded = optional_from<std::uint64_t>(j, "grading");
    s.basis_size = optional_from<std::size_t>(j, "basis_size");
    return s;
  });
}

json to_json(const mutation::OrbitReport& r) {
  return json{{"determined", r.determined},
              {"preperiod", r.preperiod},
              {"period", r.period},
              {"states_visited", r.states_visited},
              {"reason", r.reason}};
}

mutation::OrbitReport orbit_from_json(const json& j) {
  return guarded("orbit report", [&] {
    mutation::OrbitReport r;
    r.determined = j.at("determined").get<bool>();
    r.preperiod = j.at("preperiod").get<std::size_t>();
    r.period = j.at("period").get<std::size_t>();
    r.states_visited = j.at("states_visited").get<std::size_t>();
    r.reason = j.at("reason").get<std::string>();
    return r;
  });
}

json to_json(const dioph::FrobeniusNumber& f) {
  return f.infinite ? json{{"infinite", true}, {"value", nullptr}} : json{{"infinite", false}, {"value", f.value}};
}

dioph::FrobeniusNumber frobenius_from_json(const json& j) {
  return guarded("frobenius number", [&] {
    dioph::FrobeniusNumber f;
    f.infinite = j.at("infinite").get<bool>();
    if (!f.infinite) f.value = j.at("value").get<std::int64_t>();
    return f;
  });
}

json to_json(const dioph::DioProblem& p) {
  return json{{"n1", p.n1}, {"n2", p.n2}, {"k", p.k}, {"lower_bound", p.lower_bound}};
}

dioph::DioProblem problem_from_json(const json& j) {
  return guarded("diophantine problem", [&] {
    dioph::DioProblem p;
    p.n1 = j.at("n1").get<std::uint64_t>();
    p.n2 = j.at("n2").get<std::uint64_t>();
    p.k = j.at("k").get<std::vector<std::uint64_t>>();
    p.lower_bound = j.value("lower_bound", 0u);
    return p;
  });
}

json to_json(const dioph::DioSolution& s) { return json(s.lambdas); }

dioph::DioSolution solution_from_json(const json& j) {
  return guarded("solution", [&] { return dioph::DioSolution{j.get<std::vector<std::uint64_t>>()}; });
}

json to_json(const dioph::ValencyProfile& p) {
  json classes = json::array();
  for (const auto& c : p.classes) {
    std::string symbols;
    for (auto s : c.symbols) symbols += "0123456789abcdef"[s];
    classes.push_back(json{{"valency", c.valency}, {"symbols", symbols}});
  }
  return json{{"classes", classes}, {"total_letters", p.total_letters}, {"text", to_string(p)}};
}

dioph::ValencyProfile profile_from_json(const json& j) {
  return guarded("valency profile", [&] {
    dioph::ValencyProfile p;
    p.total_letters = j.at("total_letters").get<std::uint64_t>();
    for (const auto& c : j.at("classes")) {
      dioph::ValencyClass vc;
      vc.valency = c.at("valency").get<std::uint64_t>();
      for (char ch : c.at("symbols").get<std::string>()) {
        vc.symbols.push_back(static_cast<std::uint8_t>(std::stoi(std::string(1, ch), nullptr, 16)));
      }
      p.classes.push_back(std::move(vc));
    }
    return p;
  });
}

json to_json(const dioph::MessageEquation& m) {
  return json{{"profile", to_json(m.profile)},
              {"problem", to_json(m.problem)},
              {"solution", to_json(m.solution)},
              {"formula_n2", m.formula_n2}};
}

dioph::MessageEquation message_equation_from_json(const json& j) {
  return guarded("message equation", [&] {
    dioph::MessageEquation m;
    m.profile = profile_from_json(j.at("profile"));
    m.problem = problem_from_json(j.at("problem"));
    m.solution = solution_from_json(j.at("solution"));
    m.formula_n2 = j.at("formula_n2").get<std::uint64_t>();
    return m;
  });
}

json to_json(const nfa::Nfa& n) {
  json transitions = json::array();
  for (std::size_t s = 0; s < n.transitions.size(); ++s) {
    for (const auto& [letter, targets] : n.transitions[s]) {
      for (auto t : targets) transitions.push_back(json{{"from", s}, {"letter", letter}, {"to", t}});
    }
  }
  return json{{"states", n.states},
              {"letters", n.letters},
              {"transitions", transitions},
              {"initial", n.initial},
              {"accepting", n.accepting}};
}

nfa::Nfa nfa_from_json(const json& j) {
  return guarded("automaton", [&] {
    nfa::Nfa n;
    n.states = j.at("states").get<std::vector<std::string>>();
    n.letters = j.at("letters").get<std::vector<std::string>>();
    n.transitions.resize(n.states.size());
    for (const auto& t : j.at("transitions")) {
      const auto from = t.at("from").get<std::size_t>();
      const auto to = t.at("to").get<std::size_t>();
      const auto letter = t.at("letter").get<std::size_t>();
      if (from >= n.states.size() || to >= n.states.size() || letter >= n.letters.size()) {
        throw std::invalid_argument("transition refers to an unknown state or letter");
      }
      n.transitions[from][letter].insert(to);
    }
    n.initial = j.at("initial").get<std::set<std::size_t>>();
    n.accepting = j.at("accepting").get<std::set<std::size_t>>();
    return n;
  });
}

json to_json(const gt::GTPattern& p) { return json(p.rows); }

gt::GTPattern pattern_from_json(const json& j) {
  return guarded("pattern", [&] { return gt::GTPattern{j.get<std::vector<gt::Row>>()}; });
}

json to_json(const BigInt& value) { return json(to_string(value)); }

BigInt bigint_from_json(const json& j) {
  return guarded("integer", [&] {
    const auto text = j.is_string() ? j.get<std::string>() : j.dump();
    try {
      return BigInt(text);
    } catch (const std::exception&) {
      throw std::invalid_argument("'" + text + "' is not an integer");
    }
  });
}

}  // namespace brauerlab::io
