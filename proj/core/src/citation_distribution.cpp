#include "hcentral/citation_distribution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hcentral {

CitationDistribution::CitationDistribution(std::vector<Count> counts)
    : counts_(std::move(counts)) {
  if (std::any_of(counts_.begin(), counts_.end(), [](Count c) { return c < 0; })) {
    throw std::invalid_argument("citation counts must be non-negative");
  }
  std::sort(counts_.begin(), counts_.end(), std::greater<>());
}

Count CitationDistribution::at(int rank) const noexcept {
  if (rank < 1 || rank > size()) return 0;
  return counts_[static_cast<std::size_t>(rank) - 1];
}

Count CitationDistribution::cited_papers() const noexcept {
  // sorted non-increasing: the cited papers are the prefix before the first 0
  auto first_zero = std::lower_bound(counts_.begin(), counts_.end(), 0, std::greater<>());
  return static_cast<Count>(first_zero - counts_.begin());
}

Count CitationDistribution::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

}  // namespace hcentral
