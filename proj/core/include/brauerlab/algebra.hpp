#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauerlab/configuration.hpp"

namespace brauerlab {

/// How build_quiver treats truncated vertices. `reject` is the contract of
/// the construction algorithm; `skip` follows the convention that truncated
/// vertices contribute no arrows, provided every polygon still contains a
/// non-truncated vertex.
enum class TruncatedPolicy { reject, skip };

struct Arrow {
  std::size_t id = 0;
  std::size_t source = 0;  // polygon index
  std::size_t target = 0;
  std::size_t vertex = 0;  // vertex index in Gamma_0
  std::size_t step = 0;    // cover S_alpha[step] -> S_alpha[step + 1 mod val]
  unsigned position = 0;   // 1-based label number; covers between distinct polygons first, loops after

  bool is_loop() const { return source == target; }
};

struct Quiver {
  std::size_t node_count = 0;
  std::vector<Arrow> arrows;
  /// Arrow ids of the special cycle of each vertex, in step order starting
  /// at min S_alpha. Empty for truncated vertices skipped by the policy.
  std::vector<std::vector<std::size_t>> vertex_cycles;

  std::size_t loop_count() const;
  std::vector<std::size_t> outgoing(std::size_t node) const;
};

/// One rotation C_{alpha,V}^k of a special cycle: starts at polygon V,
/// k-th visit of V along S_alpha.
struct SpecialCycle {
  std::size_t vertex = 0;
  std::size_t base_polygon = 0;
  unsigned occurrence = 1;
  std::size_t step = 0;
  std::vector<std::size_t> arrows;  // length val(alpha)
};

Quiver build_quiver(const BrauerConfiguration& config, TruncatedPolicy policy = TruncatedPolicy::reject);

/// All rotations, ordered by base polygon, then vertex, then occurrence.
std::vector<SpecialCycle> special_cycles(const BrauerConfiguration& config, const Quiver& quiver);

/// Letter-style arrow name: "l<vertex>_<position>" for loops, "a<vertex>_<position>" otherwise.
std::string arrow_name(const BrauerConfiguration& config, const Arrow& arrow);
std::string cycle_name(const BrauerConfiguration& config, const SpecialCycle& cycle);

enum class IdealKind { cycle_difference, cycle_overrun, forbidden_product, loop_power };

std::string to_string(IdealKind kind);

/// A generator of the admissible ideal, kept symbolic. For cycle_difference
/// the generator is lhs - rhs; every other kind is the monomial lhs.
struct IdealGenerator {
  IdealKind kind = IdealKind::forbidden_product;
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;

  bool is_monomial() const { return kind != IdealKind::cycle_difference; }
};

/// Cycle differences are emitted as a chain per polygon (first rotation at V
/// against each other rotation at V), which spans every pairwise difference.
std::vector<IdealGenerator> ideal_generators(const BrauerConfiguration& config, const Quiver& quiver);
std::vector<IdealGenerator> ideal_generators(const BrauerConfiguration& config);

std::string describe(const BrauerConfiguration& config, const Quiver& quiver, const IdealGenerator& g);

/// 2|Q_0| + sum over non-truncated alpha of val(alpha)(mu(alpha) val(alpha) - 1).
std::uint64_t dimension(const BrauerConfiguration& config, TruncatedPolicy policy = TruncatedPolicy::reject);

/// 1 + sum mu + |Gamma_1| - |Gamma_0| + #loops - #{alpha : val = 1, mu > 1}.
/// Requires a connected configuration; rad^2 != 0 is assumed, not checked.
std::int64_t center_dimension(const BrauerConfiguration& config, const Quiver& quiver);
std::int64_t center_dimension(const BrauerConfiguration& config);

/// N when val(alpha) mu(alpha) = N for every non-truncated alpha.
std::optional<std::uint64_t> length_grading(const BrauerConfiguration& config);

enum class BasisKind { idempotent, prefix, cycle };

struct BasisElement {
  BasisKind kind = BasisKind::idempotent;
  std::size_t polygon = 0;          // source polygon
  std::vector<std::size_t> arrows;  // empty for idempotents
};

/// Idempotents, proper nonempty prefixes of every rotated C^mu, and one
/// class per polygon of full cycles C^mu identified through the
/// cycle-difference generators.
std::vector<BasisElement> enumerate_basis(const BrauerConfiguration& config, const Quiver& quiver);
std::vector<BasisElement> enumerate_basis(const BrauerConfiguration& config);

std::string path_name(const BrauerConfiguration& config, const Quiver& quiver,
                      const std::vector<std::size_t>& arrows);

struct AlgebraSummary {
  std::size_t nodes = 0;
  std::size_t arrows = 0;
  std::size_t loops = 0;
  std::uint64_t dim = 0;
  std::optional<std::int64_t> center_dim;  // absent for disconnected input
  std::optional<std::uint64_t> graded;
  std::optional<std::size_t> basis_size;   // set when the basis was enumerated

  friend bool operator==(const AlgebraSummary&, const AlgebraSummary&) = default;
};

AlgebraSummary summarize(const BrauerConfiguration& config, bool with_basis = false,
                         TruncatedPolicy policy = TruncatedPolicy::reject);

/// Graphviz digraph of the quiver; node labels are polygon words, arrow
/// labels arrow names. Output depends only on the input.
std::string quiver_dot(const BrauerConfiguration& config, const Quiver& quiver);

}  // namespace brauerlab
