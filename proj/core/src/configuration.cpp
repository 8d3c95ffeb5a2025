#include "brauerlab/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "brauerlab/error.hpp"

namespace brauerlab {

BrauerConfiguration::BrauerConfiguration(std::vector<Vertex> vertices,
                                         std::vector<std::vector<Vertex>> polygons,
                                         std::map<Vertex, unsigned> multiplicity)
    : vertices_(std::move(vertices)), polygons_(std::move(polygons)) {
  if (vertices_.size() < 2) throw std::invalid_argument("a configuration needs at least two vertices");
  {
    std::set<Vertex> seen;
    for (const auto& v : vertices_) {
      if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex label '" + v + "'");
    }
  }
  if (polygons_.empty()) throw std::invalid_argument("a configuration needs at least one polygon");

  multiplicity_.assign(vertices_.size(), 1);
  for (const auto& [label, mu] : multiplicity) {
    const auto index = vertex_index(label);
    if (!index) throw std::invalid_argument("multiplicity given for unknown vertex '" + label + "'");
    if (mu == 0) throw std::invalid_argument("multiplicity of '" + label + "' must be positive");
    multiplicity_[*index] = mu;
  }

  occ_.assign(polygons_.size(), std::vector<unsigned>(vertices_.size(), 0));
  valency_.assign(vertices_.size(), 0);
  for (std::size_t p = 0; p < polygons_.size(); ++p) {
    if (polygons_[p].size() < 2) {
      throw std::invalid_argument("polygon " + std::to_string(p + 1) + " has fewer than two vertices");
    }
    for (const auto& label : polygons_[p]) {
      const auto index = vertex_index(label);
      if (!index) {
        throw std::invalid_argument("polygon " + std::to_string(p + 1) + " uses unknown vertex '" +
                                    label + "'");
      }
      ++occ_[p][*index];
      ++valency_[*index];
    }
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (valency_[v] == 0) {
      throw NonReducedError("vertex '" + vertices_[v] + "' is truncated/absent: it occurs in no polygon");
    }
  }
}

const std::vector<Vertex>& BrauerConfiguration::polygon(std::size_t index) const {
  if (index >= polygons_.size()) throw std::out_of_range("polygon index out of range");
  return polygons_[index];
}

std::optional<std::size_t> BrauerConfiguration::vertex_index(const Vertex& label) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t BrauerConfiguration::require_vertex(const Vertex& label) const {
  const auto index = vertex_index(label);
  if (!index) throw std::invalid_argument("unknown vertex '" + label + "'");
  return *index;
}

std::map<Vertex, unsigned> BrauerConfiguration::multiplicity_map() const {
  std::map<Vertex, unsigned> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v) out[vertices_[v]] = multiplicity_[v];
  return out;
}

unsigned BrauerConfiguration::occ(const Vertex& label, std::size_t polygon) const {
  if (polygon >= polygons_.size()) throw std::out_of_range("polygon index out of range");
  const auto index = vertex_index(label);
  return index ? occ_[polygon][*index] : 0;
}

unsigned BrauerConfiguration::occ(std::size_t vertex, std::size_t polygon) const {
  if (polygon >= polygons_.size()) throw std::out_of_range("polygon index out of range");
  return occ_[polygon].at(vertex);
}

std::vector<std::size_t> SuccessorSequence::closed() const {
  std::vector<std::size_t> out = chain;
  if (!chain.empty()) out.push_back(chain.front());
  return out;
}

SuccessorSequence successor_sequence(const BrauerConfiguration& config, const Vertex& vertex) {
  return successor_sequence(config, config.require_vertex(vertex));
}

SuccessorSequence successor_sequence(const BrauerConfiguration& config, std::size_t vertex) {
  SuccessorSequence seq{config.vertices().at(vertex), {}};
  for (std::size_t p = 0; p < config.polygon_count(); ++p) {
    seq.chain.insert(seq.chain.end(), config.occ(vertex, p), p);
  }
  return seq;
}

VertexClassification classify_vertices(const BrauerConfiguration& config) {
  VertexClassification out;
  for (std::size_t v = 0; v < config.vertex_count(); ++v) {
    (config.is_truncated(v) ? out.truncated : out.non_truncated).push_back(config.vertices()[v]);
  }
  return out;
}

bool is_connected(const BrauerConfiguration& config) {
  const std::size_t n = config.polygon_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t v = 0; v < config.vertex_count(); ++v) {
    std::optional<std::size_t> first;
    for (std::size_t p = 0; p < n; ++p) {
      if (config.occ(v, p) == 0) continue;
      if (!first) {
        first = p;
      } else {
        parent[find(p)] = find(*first);
      }
    }
  }
  for (std::size_t p = 1; p < n; ++p) {
    if (find(p) != find(0)) return false;
  }
  return true;
}

Word polygon_word(const BrauerConfiguration& config, std::size_t polygon) {
  Word word;
  for (std::size_t v = 0; v < config.vertex_count(); ++v) {
    if (const unsigned s = config.occ(v, polygon); s > 0) word.push_back({config.vertices()[v], s});
  }
  return word;
}

Word run_length(const std::vector<Vertex>& letters) {
  Word word;
  for (const auto& label : letters) {
    if (!word.empty() && word.back().vertex == label) {
      ++word.back().exponent;
    } else {
      word.push_back({label, 1});
    }
  }
  return word;
}

std::vector<Word> message(const BrauerConfiguration& config) {
  std::vector<Word> out;
  out.reserve(config.polygon_count());
  for (const auto& polygon : config.polygons()) out.push_back(run_length(polygon));
  return out;
}

std::string spell(const Word& word) {
  std::string out;
  for (const auto& letter : word) {
    for (unsigned i = 0; i < letter.exponent; ++i) out += letter.vertex;
  }
  return out;
}

std::string to_string(const Word& word) {
  std::string out;
  for (const auto& letter : word) {
    if (!out.empty()) out += ' ';
    out += letter.vertex + "^" + std::to_string(letter.exponent);
  }
  return out;
}

std::string message_string(const BrauerConfiguration& config) {
  std::string out;
  for (const auto& word : message(config)) out += spell(word);
  return out;
}

}  // namespace brauerlab
