#include "ownet/bipartite.hpp"

#include <algorithm>

#include "ownet/error.hpp"

namespace ownet {

BipartiteNetwork BipartiteNetwork::create(
    std::vector<std::string> shareholder_labels,
    std::vector<std::string> company_labels, std::vector<BipartiteEdge> edges,
    std::vector<OwnerType> types) {
  const std::size_t n_s = shareholder_labels.size();
  const std::size_t n_c = company_labels.size();
  if (types.size() != n_s)
    throw input_error("type labels missing: expected " + std::to_string(n_s) +
                      " shareholder types, got " + std::to_string(types.size()));
  for (const auto& e : edges) {
    if (e.shareholder >= n_s)
      throw input_error("edge references unknown shareholder index " +
                        std::to_string(e.shareholder));
    if (e.company >= n_c)
      throw input_error("edge references unknown company index " +
                        std::to_string(e.company));
  }

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  BipartiteNetwork b;
  b.shareholder_labels_ = std::make_shared<const std::vector<std::string>>(
      std::move(shareholder_labels));
  b.company_labels_ =
      std::make_shared<const std::vector<std::string>>(std::move(company_labels));
  b.types_ = std::move(types);

  b.company_offsets_.assign(n_s + 1, 0);
  b.holder_offsets_.assign(n_c + 1, 0);
  for (const auto& e : edges) {
    ++b.company_offsets_[e.shareholder + 1];
    ++b.holder_offsets_[e.company + 1];
  }
  for (std::size_t i = 1; i <= n_s; ++i)
    b.company_offsets_[i] += b.company_offsets_[i - 1];
  for (std::size_t i = 1; i <= n_c; ++i)
    b.holder_offsets_[i] += b.holder_offsets_[i - 1];

  b.companies_.resize(edges.size());
  b.holders_.resize(edges.size());
  std::vector<std::size_t> s_fill(b.company_offsets_.begin(),
                                  b.company_offsets_.end() - 1);
  std::vector<std::size_t> c_fill(b.holder_offsets_.begin(),
                                  b.holder_offsets_.end() - 1);
  for (const auto& e : edges) {
    b.companies_[s_fill[e.shareholder]++] = e.company;
    b.holders_[c_fill[e.company]++] = e.shareholder;
  }
  b.edges_ = std::move(edges);
  return b;
}

std::vector<node_id> BipartiteNetwork::shareholder_degrees() const {
  std::vector<node_id> d(shareholder_count());
  for (std::size_t s = 0; s < d.size(); ++s)
    d[s] = static_cast<node_id>(company_offsets_[s + 1] - company_offsets_[s]);
  return d;
}

std::vector<node_id> BipartiteNetwork::company_degrees() const {
  std::vector<node_id> d(company_count());
  for (std::size_t c = 0; c < d.size(); ++c)
    d[c] = static_cast<node_id>(holder_offsets_[c + 1] - holder_offsets_[c]);
  return d;
}

}  // namespace ownet
