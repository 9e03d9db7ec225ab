#include "ownet/projection.hpp"

#include <algorithm>
#include <atomic>
#include <queue>

#include "ownet/error.hpp"
#include "ownet/parallel.hpp"

namespace ownet {

TypedProjection TypedProjection::from_edges(
    std::size_t n, std::vector<std::pair<node_id, node_id>> edges,
    std::vector<OwnerType> types,
    std::shared_ptr<const std::vector<std::string>> labels) {
  if (types.size() != n)
    throw input_error("projection requires one type per node");
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw input_error("projection edge out of range");
    if (u > v) std::swap(u, v);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  TypedProjection p;
  p.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++p.offsets_[u + 1];
    ++p.offsets_[v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) p.offsets_[i] += p.offsets_[i - 1];
  p.adj_.resize(2 * edges.size());
  std::vector<std::size_t> fill(p.offsets_.begin(), p.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    p.adj_[fill[u]++] = v;
    p.adj_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(p.adj_.begin() + p.offsets_[v], p.adj_.begin() + p.offsets_[v + 1]);
  p.types_ = std::move(types);
  p.labels_ = std::move(labels);
  p.m_ = edges.size();
  return p;
}

bool TypedProjection::has_edge(node_id u, node_id v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::string& TypedProjection::label(node_id v) const {
  static const std::string empty;
  if (!labels_ || v >= labels_->size()) return empty;
  return (*labels_)[v];
}

std::vector<std::pair<node_id, node_id>> TypedProjection::edge_list() const {
  std::vector<std::pair<node_id, node_id>> out;
  out.reserve(m_);
  for (node_id u = 0; u < node_count(); ++u)
    for (node_id v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

TypedProjection TypedProjection::induced_subgraph(
    std::span<const node_id> nodes) const {
  std::vector<node_id> dense(node_count(), static_cast<node_id>(-1));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    dense[nodes[i]] = static_cast<node_id>(i);
  std::vector<std::pair<node_id, node_id>> edges;
  std::vector<OwnerType> types(nodes.size());
  auto labels = std::make_shared<std::vector<std::string>>();
  labels->reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const node_id v = nodes[i];
    types[i] = types_[v];
    labels->push_back(label(v));
    for (node_id w : neighbors(v))
      if (dense[w] != static_cast<node_id>(-1) && v < w)
        edges.emplace_back(static_cast<node_id>(i), dense[w]);
  }
  return from_edges(nodes.size(), std::move(edges), std::move(types),
                    std::move(labels));
}

TypedProjection project(const BipartiteNetwork& b) {
  const std::size_t n = b.shareholder_count();
  std::vector<std::pair<node_id, node_id>> edges;
  // Each company contributes the clique of its holders.
  for (node_id c = 0; c < b.company_count(); ++c) {
    const auto holders = b.company_holders(c);
    for (std::size_t i = 0; i < holders.size(); ++i)
      for (std::size_t j = i + 1; j < holders.size(); ++j)
        edges.emplace_back(holders[i], holders[j]);
  }
  std::vector<OwnerType> types(b.types().begin(), b.types().end());
  return TypedProjection::from_edges(n, std::move(edges), std::move(types),
                                     b.shareholder_labels());
}

ComponentDecomposition components(const TypedProjection& p) {
  const std::size_t n = p.node_count();
  ComponentDecomposition out;
  out.component_id.assign(n, static_cast<node_id>(-1));
  std::vector<node_id> queue;
  for (node_id start = 0; start < n; ++start) {
    if (out.component_id[start] != static_cast<node_id>(-1)) continue;
    const node_id cid = static_cast<node_id>(out.sizes.size());
    node_id size = 0;
    queue.assign(1, start);
    out.component_id[start] = cid;
    while (!queue.empty()) {
      const node_id v = queue.back();
      queue.pop_back();
      ++size;
      for (node_id w : p.neighbors(v)) {
        if (out.component_id[w] == static_cast<node_id>(-1)) {
          out.component_id[w] = cid;
          queue.push_back(w);
        }
      }
    }
    out.sizes.push_back(size);
  }
  for (node_id cid = 0; cid < out.sizes.size(); ++cid) {
    if (out.sizes[cid] > out.lcc_size) {
      out.lcc_size = out.sizes[cid];
      out.lcc_id = cid;
    }
  }
  return out;
}

std::vector<node_id> ComponentDecomposition::lcc_nodes() const {
  std::vector<node_id> nodes;
  nodes.reserve(lcc_size);
  for (node_id v = 0; v < component_id.size(); ++v)
    if (component_id[v] == lcc_id) nodes.push_back(v);
  return nodes;
}

std::optional<PathStats> shortest_path_stats(const TypedProjection& p,
                                             const ComponentDecomposition& comp,
                                             int jobs) {
  const auto nodes = comp.lcc_nodes();
  const std::size_t k = nodes.size();
  if (k < 2) return std::nullopt;
  const TypedProjection g = p.induced_subgraph(nodes);

  const int n_threads = resolve_jobs(jobs);
  std::vector<std::uint64_t> dist_sum(n_threads, 0);
  std::vector<node_id> ecc(n_threads, 0);
  parallel_for(k, jobs, [&](std::size_t src) {
    // thread slot = src % n_threads matches parallel_for's stride assignment
    const int slot = static_cast<int>(src % static_cast<std::size_t>(
                                                std::min<std::size_t>(n_threads, k)));
    std::vector<node_id> dist(k, static_cast<node_id>(-1));
    std::vector<node_id> frontier{static_cast<node_id>(src)};
    std::vector<node_id> next;
    dist[src] = 0;
    node_id d = 0;
    while (!frontier.empty()) {
      next.clear();
      for (node_id v : frontier) {
        for (node_id w : g.neighbors(v)) {
          if (dist[w] == static_cast<node_id>(-1)) {
            dist[w] = d + 1;
            next.push_back(w);
          }
        }
      }
      std::swap(frontier, next);
      ++d;
    }
    std::uint64_t sum = 0;
    node_id emax = 0;
    for (std::size_t v = 0; v < k; ++v) {
      sum += dist[v];
      emax = std::max(emax, dist[v]);
    }
    dist_sum[slot] += sum;
    ecc[slot] = std::max(ecc[slot], emax);
  });

  PathStats stats;
  std::uint64_t total = 0;
  for (auto s : dist_sum) total += s;
  for (auto e : ecc) stats.diameter = std::max(stats.diameter, e);
  stats.pair_count = static_cast<std::uint64_t>(k) * (k - 1) / 2;
  // total counts each ordered pair once
  stats.average = static_cast<double>(total) / (2.0 * stats.pair_count);
  return stats;
}

double clustering_coefficient(const TypedProjection& p,
                              std::span<const node_id> scope,
                              bool global_transitivity) {
  if (scope.empty()) throw input_error("clustering scope must be nonempty");
  double local_sum = 0.0;
  std::uint64_t triangles2 = 0;  // per-node closed pairs, summed
  std::uint64_t triads = 0;
  for (node_id v : scope) {
    const auto nb = p.neighbors(v);
    const std::uint64_t k = nb.size();
    if (k < 2) continue;
    std::uint64_t closed = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (p.has_edge(nb[i], nb[j])) ++closed;
    local_sum += static_cast<double>(closed) / (0.5 * k * (k - 1));
    triangles2 += closed;
    triads += k * (k - 1) / 2;
  }
  if (global_transitivity)
    return triads == 0 ? 0.0
                       : static_cast<double>(triangles2) /
                             static_cast<double>(triads);
  return local_sum / static_cast<double>(scope.size());
}

}  // namespace ownet
