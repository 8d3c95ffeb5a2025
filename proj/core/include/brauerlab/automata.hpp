#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "brauerlab/algebra.hpp"
#include "brauerlab/configuration.hpp"

namespace brauerlab::nfa {

/// States are polygons, letter i is arrow i of the quiver.
struct Nfa {
  std::vector<std::string> states;   // "V1", "V2", ...
  std::vector<std::string> letters;  // arrow names
  /// transitions[state] maps a letter to its target set.
  std::vector<std::map<std::size_t, std::set<std::size_t>>> transitions;
  std::set<std::size_t> initial;
  std::set<std::size_t> accepting;

  std::optional<std::size_t> letter_index(const std::string& name) const;
  std::size_t transition_count() const;
};

/// Initial states: the first polygon of every successor sequence that is
/// minimal in length-lexicographic order. Accepting state: the first polygon
/// of the sequence of the least such vertex.
Nfa build_nfa(const BrauerConfiguration& config, const Quiver& quiver);
Nfa build_nfa(const BrauerConfiguration& config, TruncatedPolicy policy = TruncatedPolicy::reject);

/// Comma-separated letter names. Throws std::invalid_argument for an unknown letter.
std::vector<std::size_t> parse_word(const Nfa& nfa, const std::string& text);

/// Plain automaton semantics: some run from an initial state ends in an accepting state.
bool runs_to_accepting(const Nfa& nfa, const std::vector<std::size_t>& word);

/// Accepts when the word runs to an accepting state and contains no
/// monomial generator as a factor. Cycle-difference generators identify
/// their two sides: a word is also accepted when its rewrite to the first
/// representative is.
bool accepts(const Nfa& nfa, const std::vector<IdealGenerator>& ideal, const std::vector<std::size_t>& word);
bool accepts(const Nfa& nfa, const std::vector<IdealGenerator>& ideal, const std::string& word);

/// Accepting states drawn as double circles, initial states in bold.
std::string export_dot(const Nfa& nfa);
/// One "state letter target" line per transition, in state and letter order.
std::string transition_table(const Nfa& nfa);

/// Subset construction. State 0 is the initial subset; missing transitions go nowhere.
struct Dfa {
  std::vector<std::set<std::size_t>> subsets;
  std::vector<std::map<std::size_t, std::size_t>> next;
  std::vector<bool> accepting;

  bool accepts(const std::vector<std::size_t>& word) const;
};

Dfa determinize(const Nfa& nfa);

}  // namespace brauerlab::nfa
