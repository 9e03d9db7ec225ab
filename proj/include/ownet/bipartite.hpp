#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ownet/owner_type.hpp"

namespace ownet {

using node_id = std::uint32_t;

struct BipartiteEdge {
  node_id shareholder;
  node_id company;

  friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
  friend auto operator<=>(const BipartiteEdge&, const BipartiteEdge&) = default;
};

// Shareholder -> company investment network. Immutable after construction;
// safe to share read-only across threads. Node ids are dense per role;
// external string labels are retained for reporting. The same external label
// may appear in both roles (a company can itself be a shareholder).
class BipartiteNetwork {
 public:
  // Sorts and deduplicates edges. Throws input_error on out-of-range edge
  // endpoints or a shareholder without a type label (named by label).
  static BipartiteNetwork create(std::vector<std::string> shareholder_labels,
                                 std::vector<std::string> company_labels,
                                 std::vector<BipartiteEdge> edges,
                                 std::vector<OwnerType> types);

  std::size_t shareholder_count() const { return shareholder_labels_->size(); }
  std::size_t company_count() const { return company_labels_->size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const BipartiteEdge> edges() const { return edges_; }

  std::span<const node_id> company_holders(node_id c) const {
    return {holders_.data() + holder_offsets_[c],
            holder_offsets_[c + 1] - holder_offsets_[c]};
  }
  std::span<const node_id> shareholder_companies(node_id s) const {
    return {companies_.data() + company_offsets_[s],
            company_offsets_[s + 1] - company_offsets_[s]};
  }

  OwnerType type_of(node_id s) const { return types_[s]; }
  std::span<const OwnerType> types() const { return types_; }

  const std::string& shareholder_label(node_id s) const {
    return (*shareholder_labels_)[s];
  }
  const std::string& company_label(node_id c) const {
    return (*company_labels_)[c];
  }
  std::shared_ptr<const std::vector<std::string>> shareholder_labels() const {
    return shareholder_labels_;
  }
  std::shared_ptr<const std::vector<std::string>> company_labels() const {
    return company_labels_;
  }

  std::vector<node_id> shareholder_degrees() const;
  std::vector<node_id> company_degrees() const;

 private:
  BipartiteNetwork() = default;

  std::shared_ptr<const std::vector<std::string>> shareholder_labels_;
  std::shared_ptr<const std::vector<std::string>> company_labels_;
  std::vector<BipartiteEdge> edges_;  // sorted, unique
  std::vector<OwnerType> types_;      // per shareholder
  // CSR in both directions.
  std::vector<std::size_t> holder_offsets_;
  std::vector<node_id> holders_;
  std::vector<std::size_t> company_offsets_;
  std::vector<node_id> companies_;
};

}  // namespace ownet
