#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "brauerlab/algebra.hpp"
#include "brauerlab/automata.hpp"
#include "brauerlab/configuration.hpp"
#include "brauerlab/diophantine.hpp"
#include "brauerlab/gt.hpp"
#include "brauerlab/mutation.hpp"

namespace brauerlab::io {

using nlohmann::json;

inline constexpr const char* kSchema = "brauerlab/1";

/// {"schema": kSchema, "command": ..., "result": ...}.
json envelope(const std::string& command, json result);

// Configuration files: {"vertices": [...], "polygons": [[...], ...], "multiplicity": {"v": m}}.
json to_json(const BrauerConfiguration& config);
/// Throws std::invalid_argument on a malformed document; validation errors
/// of the configuration itself propagate unchanged.
BrauerConfiguration configuration_from_json(const json& j);
BrauerConfiguration load_configuration(const std::string& path);
void save_configuration(const BrauerConfiguration& config, const std::string& path);

/// Seed files: {"degree", "modulus", "words": [[..]], "round": "affine|sbox|identity",
/// "scales": [..], "shifts": [[..]], "cyclic": bool}. Elements are integers.
json to_json(const mutation::Seed& seed);
mutation::Seed seed_from_json(const json& j);

json to_json(const AlgebraSummary& s);
AlgebraSummary summary_from_json(const json& j);

json to_json(const mutation::OrbitReport& r);
mutation::OrbitReport orbit_from_json(const json& j);

json to_json(const dioph::FrobeniusNumber& f);
dioph::FrobeniusNumber frobenius_from_json(const json& j);

json to_json(const dioph::DioProblem& p);
dioph::DioProblem problem_from_json(const json& j);

json to_json(const dioph::DioSolution& s);
dioph::DioSolution solution_from_json(const json& j);

json to_json(const dioph::ValencyProfile& p);
dioph::ValencyProfile profile_from_json(const json& j);

json to_json(const dioph::MessageEquation& m);
dioph::MessageEquation message_equation_from_json(const json& j);

json to_json(const nfa::Nfa& n);
nfa::Nfa nfa_from_json(const json& j);

json to_json(const gt::GTPattern& p);
gt::GTPattern pattern_from_json(const json& j);

/// Arbitrary-precision integers are carried as decimal strings.
json to_json(const BigInt& value);
BigInt bigint_from_json(const json& j);

}  // namespace brauerlab::io
