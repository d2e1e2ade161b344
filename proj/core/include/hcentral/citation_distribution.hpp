#pragma once

#include <vector>

#include "hcentral/types.hpp"

namespace hcentral {

/// One author snapshot's per-paper citation counts, kept sorted in
/// non-increasing order. Construction canonicalizes: callers may pass counts
/// in any order. Papers with zero citations are kept (they are legal input
/// rows) but never contribute to any index.
class CitationDistribution {
 public:
  CitationDistribution() = default;

  /// Sorts the counts non-increasing. Throws std::invalid_argument if any
  /// count is negative.
  explicit CitationDistribution(std::vector<Count> counts);

  const std::vector<Count>& counts() const noexcept { return counts_; }

  /// c_rank with 1-based rank; ranks past the end are 0 by definition.
  Count at(int rank) const noexcept;

  /// Number of stored papers, including zero-cited ones.
  int size() const noexcept { return static_cast<int>(counts_.size()); }

  /// N_p: papers with at least one citation.
  Count cited_papers() const noexcept;

  /// N_c: total citations.
  Count total() const noexcept;

  bool operator==(const CitationDistribution&) const = default;

 private:
  std::vector<Count> counts_;
};

}  // namespace hcentral
