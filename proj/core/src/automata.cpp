#include "brauerlab/automata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace brauerlab::nfa {

std::optional<std::size_t> Nfa::letter_index(const std::string& name) const {
  auto it = std::find(letters.begin(), letters.end(), name);
  if (it == letters.end()) return std::nullopt;
  return static_cast<std::size_t>(it - letters.begin());
}

std::size_t Nfa::transition_count() const {
  std::size_t n = 0;
  for (const auto& row : transitions) {
    for (const auto& [letter, targets] : row) n += targets.size();
  }
  return n;
}

namespace {

bool length_lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Nfa build_nfa(const BrauerConfiguration& config, const Quiver& quiver) {
  Nfa nfa;
  for (std::size_t i = 0; i < quiver.node_count; ++i) nfa.states.push_back("V" + std::to_string(i + 1));
  nfa.transitions.resize(quiver.node_count);
  for (const auto& a : quiver.arrows) {
    nfa.letters.push_back(arrow_name(config, a));
    nfa.transitions[a.source][a.id].insert(a.target);
  }

  std::optional<std::vector<std::size_t>> best;
  std::vector<std::size_t> best_vertices;
  for (std::size_t v = 0; v < config.vertex_count(); ++v) {
    if (quiver.vertex_cycles[v].empty()) continue;
    const auto chain = successor_sequence(config, v).chain;
    if (!best || length_lex_less(chain, *best)) {
      best = chain;
      best_vertices = {v};
    } else if (chain == *best) {
      best_vertices.push_back(v);
    }
  }
  if (best) {
    nfa.initial.insert(best->front());
    nfa.accepting.insert(successor_sequence(config, best_vertices.front()).chain.front());
  }
  return nfa;
}

Nfa build_nfa(const BrauerConfiguration& config, TruncatedPolicy policy) {
  return build_nfa(config, build_quiver(config, policy));
}

std::vector<std::size_t> parse_word(const Nfa& nfa, const std::string& text) {
  std::vector<std::size_t> word;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    auto idx = nfa.letter_index(token);
    if (!idx) throw std::invalid_argument("unknown letter '" + token + "'");
    word.push_back(*idx);
  }
  return word;
}

bool runs_to_accepting(const Nfa& nfa, const std::vector<std::size_t>& word) {
  std::set<std::size_t> current = nfa.initial;
  for (auto letter : word) {
    if (letter >= nfa.letters.size()) throw std::invalid_argument("letter index out of range");
    std::set<std::size_t> next;
    for (auto s : current) {
      auto it = nfa.transitions[s].find(letter);
      if (it != nfa.transitions[s].end()) next.insert(it->second.begin(), it->second.end());
    }
    current = std::move(next);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](auto s) { return nfa.accepting.count(s) > 0; });
}

namespace {

bool has_factor(const std::vector<std::size_t>& word, const std::vector<std::size_t>& factor) {
  return !factor.empty() && std::search(word.begin(), word.end(), factor.begin(), factor.end()) != word.end();
}

bool passes(const Nfa& nfa, const std::vector<IdealGenerator>& ideal, const std::vector<std::size_t>& word) {
  for (const auto& g : ideal) {
    if (g.is_monomial() && has_factor(word, g.lhs)) return false;
  }
  return runs_to_accepting(nfa, word);
}

// Rewrites every occurrence of a second representative to the first one.
std::vector<std::size_t> canonical(const std::vector<IdealGenerator>& ideal, std::vector<std::size_t> word) {
  for (const auto& g : ideal) {
    if (g.kind != IdealKind::cycle_difference || g.rhs.empty()) continue;
    for (auto it = std::search(word.begin(), word.end(), g.rhs.begin(), g.rhs.end()); it != word.end();
         it = std::search(word.begin(), word.end(), g.rhs.begin(), g.rhs.end())) {
      const auto at = it - word.begin();
      word.erase(it, it + static_cast<std::ptrdiff_t>(g.rhs.size()));
      word.insert(word.begin() + at, g.lhs.begin(), g.lhs.end());
      if (g.lhs == g.rhs) break;
    }
  }
  return word;
}

}  // namespace

bool accepts(const Nfa& nfa, const std::vector<IdealGenerator>& ideal, const std::vector<std::size_t>& word) {
  for (auto letter : word) {
    if (letter >= nfa.letters.size()) throw std::invalid_argument("letter index out of range");
  }
  return passes(nfa, ideal, word) || passes(nfa, ideal, canonical(ideal, word));
}

bool accepts(const Nfa& nfa, const std::vector<IdealGenerator>& ideal, const std::string& word) {
  return accepts(nfa, ideal, parse_word(nfa, word));
}

std::string export_dot(const Nfa& nfa) {
  std::ostringstream out;
  out << "digraph nfa {\n  rankdir=LR;\n";
  for (std::size_t s = 0; s < nfa.states.size(); ++s) {
    out << "  " << nfa.states[s] << " [shape=" << (nfa.accepting.count(s) ? "doublecircle" : "circle");
    if (nfa.initial.count(s)) out << ", style=bold";
    out << "];\n";
  }
  for (std::size_t s = 0; s < nfa.states.size(); ++s) {
    for (const auto& [letter, targets] : nfa.transitions[s]) {
      for (auto t : targets) {
        out << "  " << nfa.states[s] << " -> " << nfa.states[t] << " [label=\"" << nfa.letters[letter] << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string transition_table(const Nfa& nfa) {
  std::ostringstream out;
  for (std::size_t s = 0; s < nfa.states.size(); ++s) {
    for (const auto& [letter, targets] : nfa.transitions[s]) {
      for (auto t : targets) out << nfa.states[s] << ' ' << nfa.letters[letter] << ' ' << nfa.states[t] << '\n';
    }
  }
  return out.str();
}

bool Dfa::accepts(const std::vector<std::size_t>& word) const {
  std::size_t state = 0;
  for (auto letter : word) {
    auto it = next[state].find(letter);
    if (it == next[state].end()) return false;
    state = it->second;
  }
  return accepting[state];
}

Dfa determinize(const Nfa& nfa) {
  Dfa dfa;
  std::map<std::set<std::size_t>, std::size_t> index;
  auto intern = [&](const std::set<std::size_t>& subset) {
    auto [it, inserted] = index.emplace(subset, dfa.subsets.size());
    if (inserted) {
      dfa.subsets.push_back(subset);
      dfa.next.emplace_back();
      dfa.accepting.push_back(
          std::any_of(subset.begin(), subset.end(), [&](auto s) { return nfa.accepting.count(s) > 0; }));
    }
    return it->second;
  };
  intern(nfa.initial);
  for (std::size_t i = 0; i < dfa.subsets.size(); ++i) {
    std::map<std::size_t, std::set<std::size_t>> moves;
    for (auto s : dfa.subsets[i]) {
      for (const auto& [letter, targets] : nfa.transitions[s]) moves[letter].insert(targets.begin(), targets.end());
    }
    for (const auto& [letter, targets] : moves) {
      const std::size_t j = intern(targets);
      dfa.next[i][letter] = j;
    }
  }
  return dfa;
}

}  // namespace brauerlab::nfa
