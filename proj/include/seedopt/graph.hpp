#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seedopt/types.hpp"

namespace seedopt {

enum class WorldState { Good, Bad };

const char* world_state_name(WorldState s);

/// One sampled network. Nodes are grouped by type in contiguous blocks:
/// type i occupies [type_starts[i], type_starts[i] + type_counts[i]).
struct GraphInstance {
    std::int64_t n = 0;
    std::vector<std::uint32_t> node_types;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint32_t> component_id;          // dense, ordered by smallest member
    std::vector<std::int64_t> component_sizes;
    std::vector<std::int64_t> type_counts;
    std::vector<std::int64_t> type_starts;

    bool has_components() const { return !component_id.empty(); }

    std::size_t largest_component() const;   // index into component_sizes
};

/// Deterministic largest-remainder rounding of mu * n into per-type counts.
std::vector<std::int64_t> type_allocation(const TypeSpace& types, std::int64_t n);

/// Samples an inhomogeneous random graph: each pair {u,v} is an edge with
/// probability min(kappa(type u, type v)/n, 1), independently. Work is
/// O(n + edges) via geometric skip sampling over each type-block pair.
/// Bit-identical output for identical (scenario, state, n, seed).
GraphInstance sample_graph(const Scenario& s, WorldState state, std::int64_t n,
                           std::uint64_t seed);

/// Fills component_id/component_sizes by union-find; labels are assigned
/// in ascending order of each component's smallest node index.
GraphInstance& components(GraphInstance& g);

/// Draws the plan's per-type seed counts uniformly without replacement and
/// returns the total size of the union of seeded components.
std::int64_t measure_adoption(const GraphInstance& g, const SeedingPlan& plan,
                              std::uint64_t seed);

} // namespace seedopt
