#include "brauerlab/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "brauerlab/error.hpp"

namespace brauerlab {
namespace {

void check_policy(const BrauerConfiguration& config, TruncatedPolicy policy) {
  const auto classes = classify_vertices(config);
  if (classes.is_reduced()) return;
  if (policy == TruncatedPolicy::reject) {
    throw NonReducedError("non-reduced input: truncated vertex '" + classes.truncated.front() + "'");
  }
  for (std::size_t p = 0; p < config.polygon_count(); ++p) {
    bool has_non_truncated = false;
    for (std::size_t v = 0; v < config.vertex_count(); ++v) {
      if (config.occ(v, p) > 0 && !config.is_truncated(v)) has_non_truncated = true;
    }
    if (!has_non_truncated) {
      throw NonReducedError("polygon " + std::to_string(p + 1) + " has only truncated vertices");
    }
  }
}

std::vector<std::size_t> power(const std::vector<std::size_t>& cycle, unsigned mu) {
  std::vector<std::size_t> out;
  out.reserve(cycle.size() * mu);
  for (unsigned i = 0; i < mu; ++i) out.insert(out.end(), cycle.begin(), cycle.end());
  return out;
}

}  // namespace

std::size_t Quiver::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(arrows.begin(), arrows.end(), [](const Arrow& a) { return a.is_loop(); }));
}

std::vector<std::size_t> Quiver::outgoing(std::size_t node) const {
  std::vector<std::size_t> out;
  for (const auto& a : arrows) {
    if (a.source == node) out.push_back(a.id);
  }
  return out;
}

Quiver build_quiver(const BrauerConfiguration& config, TruncatedPolicy policy) {
  check_policy(config, policy);
  Quiver quiver;
  quiver.node_count = config.polygon_count();
  quiver.vertex_cycles.resize(config.vertex_count());
  for (std::size_t v = 0; v < config.vertex_count(); ++v) {
    if (config.is_truncated(v)) continue;
    const auto chain = successor_sequence(config, v).chain;
    const std::size_t val = chain.size();
    std::vector<Arrow> local;
    for (std::size_t step = 0; step < val; ++step) {
      Arrow a;
      a.source = chain[step];
      a.target = chain[(step + 1) % val];
      a.vertex = v;
      a.step = step;
      local.push_back(a);
    }
    unsigned position = 0;
    for (auto& a : local) {
      if (!a.is_loop()) a.position = ++position;
    }
    for (auto& a : local) {
      if (a.is_loop()) a.position = ++position;
    }
    for (auto& a : local) {
      a.id = quiver.arrows.size();
      quiver.vertex_cycles[v].push_back(a.id);
      quiver.arrows.push_back(a);
    }
  }
  return quiver;
}

std::vector<SpecialCycle> special_cycles(const BrauerConfiguration& config, const Quiver& quiver) {
  std::vector<SpecialCycle> out;
  for (std::size_t v = 0; v < config.vertex_count(); ++v) {
    const auto& cycle = quiver.vertex_cycles.at(v);
    const std::size_t val = cycle.size();
    std::map<std::size_t, unsigned> visits;
    for (std::size_t step = 0; step < val; ++step) {
      SpecialCycle c;
      c.vertex = v;
      c.step = step;
      c.base_polygon = quiver.arrows[cycle[step]].source;
      c.occurrence = ++visits[c.base_polygon];
      for (std::size_t k = 0; k < val; ++k) c.arrows.push_back(cycle[(step + k) % val]);
      out.push_back(std::move(c));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SpecialCycle& a, const SpecialCycle& b) {
    return std::tie(a.base_polygon, a.vertex, a.occurrence) <
           std::tie(b.base_polygon, b.vertex, b.occurrence);
  });
  return out;
}

std::string arrow_name(const BrauerConfiguration& config, const Arrow& arrow) {
  return std::string(arrow.is_loop() ? "l" : "a") + config.vertices().at(arrow.vertex) + "_" +
         std::to_string(arrow.position);
}

std::string cycle_name(const BrauerConfiguration& config, const SpecialCycle& cycle) {
  return "C_" + config.vertices().at(cycle.vertex) + ",V" + std::to_string(cycle.base_polygon + 1) +
         "^" + std::to_string(cycle.occurrence);
}

std::string to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::cycle_difference: return "cycle-difference";
    case IdealKind::cycle_overrun: return "cycle-overrun";
    case IdealKind::forbidden_product: return "forbidden-product";
    case IdealKind::loop_power: return "loop-power";
  }
  return "unknown";
}

std::vector<IdealGenerator> ideal_generators(const BrauerConfiguration& config, const Quiver& quiver) {
  std::vector<IdealGenerator> out;
  const auto cycles = special_cycles(config, quiver);

  // (a) C_alpha^mu - C_beta^mu for special cycles at the same polygon.
  for (std::size_t i = 0; i < cycles.size();) {
    std::size_t j = i;
    while (j < cycles.size() && cycles[j].base_polygon == cycles[i].base_polygon) ++j;
    const auto first = power(cycles[i].arrows, config.multiplicity(cycles[i].vertex));
    for (std::size_t k = i + 1; k < j; ++k) {
      out.push_back({IdealKind::cycle_difference, first,
                     power(cycles[k].arrows, config.multiplicity(cycles[k].vertex))});
    }
    i = j;
  }

  // (b) C^mu a = 0, a the first arrow of the rotation.
  for (const auto& c : cycles) {
    auto path = power(c.arrows, config.multiplicity(c.vertex));
    path.push_back(c.arrows.front());
    out.push_back({IdealKind::cycle_overrun, std::move(path), {}});
  }

  // (c) ab = 0 for composable arrows of special cycles of distinct vertices.
  for (const auto& a : quiver.arrows) {
    for (const auto& b : quiver.arrows) {
      if (a.vertex == b.vertex || a.target != b.source) continue;
      out.push_back({IdealKind::forbidden_product, {a.id, b.id}, {}});
    }
  }

  // (d) a^{mu+1} = 0 for the loop of a valency-1 vertex with mu > 1.
  for (std::size_t v = 0; v < config.vertex_count(); ++v) {
    const unsigned mu = config.multiplicity(v);
    if (config.valency(v) != 1 || mu <= 1 || quiver.vertex_cycles[v].empty()) continue;
    out.push_back({IdealKind::loop_power, std::vector<std::size_t>(mu + 1, quiver.vertex_cycles[v][0]), {}});
  }
  return out;
}

std::vector<IdealGenerator> ideal_generators(const BrauerConfiguration& config) {
  return ideal_generators(config, build_quiver(config));
}

std::string path_name(const BrauerConfiguration& config, const Quiver& quiver,
                      const std::vector<std::size_t>& arrows) {
  std::string out;
  for (std::size_t id : arrows) {
    if (!out.empty()) out += ' ';
    out += arrow_name(config, quiver.arrows.at(id));
  }
  return out;
}

std::string describe(const BrauerConfiguration& config, const Quiver& quiver, const IdealGenerator& g) {
  std::string out = to_string(g.kind) + ": " + path_name(config, quiver, g.lhs);
  if (g.kind == IdealKind::cycle_difference) {
    out += " - " + path_name(config, quiver, g.rhs);
  }
  return out + " = 0";
}

std::uint64_t dimension(const BrauerConfiguration& config, TruncatedPolicy policy) {
  check_policy(config, policy);
  std::uint64_t dim = 2 * static_cast<std::uint64_t>(config.polygon_count());
  for (std::size_t v = 0; v < config.vertex_count(); ++v) {
    if (config.is_truncated(v)) continue;
    const std::uint64_t val = config.valency(v);
    dim += val * (config.multiplicity(v) * val - 1);
  }
  return dim;
}

std::int64_t center_dimension(const BrauerConfiguration& config, const Quiver& quiver) {
  if (!is_connected(config)) throw DomainError("center dimension requires a connected configuration");
  std::int64_t total_mu = 0;
  std::int64_t single_loops = 0;
  for (std::size_t v = 0; v < config.vertex_count(); ++v) {
    total_mu += config.multiplicity(v);
    if (config.valency(v) == 1 && config.multiplicity(v) > 1) ++single_loops;
  }
  return 1 + total_mu + static_cast<std::int64_t>(config.polygon_count()) -
         static_cast<std::int64_t>(config.vertex_count()) +
         static_cast<std::int64_t>(quiver.loop_count()) - single_loops;
}

std::int64_t center_dimension(const BrauerConfiguration& config) {
  return center_dimension(config, build_quiver(config));
}

std::optional<std::uint64_t> length_grading(const BrauerConfiguration& config) {
  std::optional<std::uint64_t> n;
  for (std::size_t v = 0; v < config.vertex_count(); ++v) {
    if (config.is_truncated(v)) continue;
    const std::uint64_t product = std::uint64_t{config.valency(v)} * config.multiplicity(v);
    if (n && *n != product) return std::nullopt;
    n = product;
  }
  return n;
}

std::vector<BasisElement> enumerate_basis(const BrauerConfiguration& config, const Quiver& quiver) {
  std::vector<BasisElement> basis;
  for (std::size_t p = 0; p < config.polygon_count(); ++p) {
    basis.push_back({BasisKind::idempotent, p, {}});
  }

  const auto cycles = special_cycles(config, quiver);
  for (const auto& c : cycles) {
    const auto full = power(c.arrows, config.multiplicity(c.vertex));
    for (std::size_t len = 1; len < full.size(); ++len) {
      basis.push_back({BasisKind::prefix, c.base_polygon,
                       std::vector<std::size_t>(full.begin(), full.begin() + static_cast<long>(len))});
    }
  }

  // Full cycles C^mu, merged along the cycle-difference generators.
  std::map<std::vector<std::size_t>, std::size_t> index_of;
  std::vector<std::vector<std::size_t>> fulls;
  for (const auto& c : cycles) {
    auto full = power(c.arrows, config.multiplicity(c.vertex));
    if (index_of.emplace(full, fulls.size()).second) fulls.push_back(std::move(full));
  }
  std::vector<std::size_t> parent(fulls.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : ideal_generators(config, quiver)) {
    if (g.kind != IdealKind::cycle_difference) continue;
    const std::size_t a = find(index_of.at(g.lhs));
    const std::size_t b = find(index_of.at(g.rhs));
    parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < fulls.size(); ++i) {
    if (find(i) == i) roots.push_back(i);
  }
  std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
    return quiver.arrows[fulls[a].front()].source < quiver.arrows[fulls[b].front()].source;
  });
  for (std::size_t r : roots) {
    basis.push_back({BasisKind::cycle, quiver.arrows[fulls[r].front()].source, fulls[r]});
  }
  return basis;
}

std::vector<BasisElement> enumerate_basis(const BrauerConfiguration& config) {
  return enumerate_basis(config, build_quiver(config));
}

AlgebraSummary summarize(const BrauerConfiguration& config, bool with_basis, TruncatedPolicy policy) {
  const Quiver quiver = build_quiver(config, policy);
  AlgebraSummary s;
  s.nodes = quiver.node_count;
  s.arrows = quiver.arrows.size();
  s.loops = quiver.loop_count();
  s.dim = dimension(config, policy);
  if (is_connected(config)) s.center_dim = center_dimension(config, quiver);
  s.graded = length_grading(config);
  if (with_basis) s.basis_size = enumerate_basis(config, quiver).size();
  return s;
}

std::string quiver_dot(const BrauerConfiguration& config, const Quiver& quiver) {
  std::ostringstream out;
  out << "digraph quiver {\n  rankdir=LR;\n";
  for (std::size_t p = 0; p < quiver.node_count; ++p) {
    out << "  V" << p + 1 << " [label=\"V" << p + 1 << ": " << to_string(polygon_word(config, p))
        << "\"];\n";
  }
  for (const auto& a : quiver.arrows) {
    out << "  V" << a.source + 1 << " -> V" << a.target + 1 << " [label=\"" << arrow_name(config, a)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace brauerlab
