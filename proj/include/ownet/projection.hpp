#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ownet/bipartite.hpp"
#include "ownet/owner_type.hpp"

namespace ownet {

// Simple undirected shareholder graph with per-node owner types: symmetric
// adjacency, no self-loops, 0/1 edges. Immutable after construction.
class TypedProjection {
 public:
  // Builds from an undirected edge list; self-loops dropped, duplicates
  // collapsed. `labels` is optional (generated node names are used when
  // absent).
  static TypedProjection from_edges(
      std::size_t n, std::vector<std::pair<node_id, node_id>> edges,
      std::vector<OwnerType> types,
      std::shared_ptr<const std::vector<std::string>> labels = nullptr);

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return m_; }

  std::span<const node_id> neighbors(node_id v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  node_id degree(node_id v) const {
    return static_cast<node_id>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(node_id u, node_id v) const;

  OwnerType type_of(node_id v) const { return types_[v]; }
  std::span<const OwnerType> types() const { return types_; }

  const std::string& label(node_id v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<node_id, node_id>> edge_list() const;

  // Subgraph on `nodes` (dense reindexed 0..k-1 in the given order).
  TypedProjection induced_subgraph(std::span<const node_id> nodes) const;

 private:
  TypedProjection() = default;

  std::vector<std::size_t> offsets_;
  std::vector<node_id> adj_;  // sorted per node
  std::vector<OwnerType> types_;
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::size_t m_ = 0;
};

// One-mode projection: shareholders i and j are linked iff some company is
// held by both. Types carried over from the bipartite network.
TypedProjection project(const BipartiteNetwork& b);

struct ComponentDecomposition {
  std::vector<node_id> component_id;  // per node
  std::vector<node_id> sizes;         // per component
  node_id lcc_id = 0;
  node_id lcc_size = 0;

  std::size_t count() const { return sizes.size(); }
  std::vector<node_id> lcc_nodes() const;
};

// BFS labeling; component ids are ordered by the smallest node id they
// contain, which makes the labeling deterministic. LCC ties break to the
// component containing the smallest node id.
ComponentDecomposition components(const TypedProjection& p);

struct PathStats {
  node_id diameter = 0;
  double average = 0.0;          // over unordered node pairs
  std::uint64_t pair_count = 0;
};

// Diameter and mean shortest-path length over the LCC. Empty result when the
// LCC is a single node (no pairs to measure).
std::optional<PathStats> shortest_path_stats(const TypedProjection& p,
                                             const ComponentDecomposition& comp,
                                             int jobs = 0);

// Mean local clustering over `scope`: triangles over connected neighbour
// pairs; nodes of degree < 2 contribute 0 (and stay in the denominator).
// `global_transitivity` switches to 3*triangles / open-triads instead.
double clustering_coefficient(const TypedProjection& p,
                              std::span<const node_id> scope,
                              bool global_transitivity = false);

}  // namespace ownet
