#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brauerlab {

using Vertex = std::string;

/// One factor alpha^s of a polygon word.
struct Letter {
  Vertex vertex;
  unsigned exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// A Brauer configuration (vertices, polygons, multiplicity, ordering).
///
/// Polygons keep the letter order they were written in, so binary cluster
/// polygons remain readable as bit strings; every combinatorial query only
/// looks at the underlying multiset. The list order of polygons is the
/// well-ordering used for successor sequences.
class BrauerConfiguration {
 public:
  /// Validates and throws std::invalid_argument on malformed input. A vertex
  /// of Gamma_0 that occurs in no polygon raises NonReducedError.
  /// Vertices missing from `multiplicity` get multiplicity 1.
  BrauerConfiguration(std::vector<Vertex> vertices, std::vector<std::vector<Vertex>> polygons,
                      std::map<Vertex, unsigned> multiplicity = {});

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::vector<Vertex>>& polygons() const { return polygons_; }
  const std::vector<Vertex>& polygon(std::size_t index) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t polygon_count() const { return polygons_.size(); }

  std::optional<std::size_t> vertex_index(const Vertex& label) const;
  /// Throws std::invalid_argument for unknown labels.
  std::size_t require_vertex(const Vertex& label) const;

  unsigned multiplicity(std::size_t vertex) const { return multiplicity_.at(vertex); }
  unsigned multiplicity(const Vertex& label) const { return multiplicity_.at(require_vertex(label)); }
  std::map<Vertex, unsigned> multiplicity_map() const;

  /// occ(alpha, V). Unknown vertex labels give 0; a bad polygon index throws.
  unsigned occ(const Vertex& label, std::size_t polygon) const;
  unsigned occ(std::size_t vertex, std::size_t polygon) const;

  unsigned valency(const Vertex& label) const { return valency(require_vertex(label)); }
  unsigned valency(std::size_t vertex) const { return valency_.at(vertex); }

  bool is_truncated(std::size_t vertex) const {
    return multiplicity(vertex) * valency(vertex) == 1;
  }

  friend bool operator==(const BrauerConfiguration& a, const BrauerConfiguration& b) {
    return a.vertices_ == b.vertices_ && a.polygons_ == b.polygons_ &&
           a.multiplicity_ == b.multiplicity_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Vertex>> polygons_;
  std::vector<unsigned> multiplicity_;
  std::vector<std::vector<unsigned>> occ_;  // [polygon][vertex]
  std::vector<unsigned> valency_;
};

/// S_alpha: polygon indices containing alpha in list order, each repeated
/// occ(alpha, V) times. closed() appends the wrap-around back to min S_alpha.
struct SuccessorSequence {
  Vertex vertex;
  std::vector<std::size_t> chain;

  std::vector<std::size_t> closed() const;
};

SuccessorSequence successor_sequence(const BrauerConfiguration& config, const Vertex& vertex);
SuccessorSequence successor_sequence(const BrauerConfiguration& config, std::size_t vertex);

struct VertexClassification {
  std::vector<Vertex> truncated;
  std::vector<Vertex> non_truncated;

  bool is_reduced() const { return truncated.empty(); }
};

VertexClassification classify_vertices(const BrauerConfiguration& config);

/// Connectivity of the graph on polygons whose edges join polygons sharing a vertex.
bool is_connected(const BrauerConfiguration& config);

/// w(U) with vertices in Gamma_0 order and s_i = occ(alpha_i, U).
Word polygon_word(const BrauerConfiguration& config, std::size_t polygon);

/// Run-length encoding of a letter sequence as written.
Word run_length(const std::vector<Vertex>& letters);

/// M(Gamma): one word per polygon, in list order, each the run-length form of
/// the polygon as written (equal to polygon_word() when written sorted).
std::vector<Word> message(const BrauerConfiguration& config);

/// Expanded concatenation of labels, e.g. {0^1, 1^2} -> "011".
std::string spell(const Word& word);
/// Exponent notation, e.g. "0^1 1^2".
std::string to_string(const Word& word);
/// Concatenation of spell() over the message.
std::string message_string(const BrauerConfiguration& config);

}  // namespace brauerlab
