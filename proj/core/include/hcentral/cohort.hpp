#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hcentral/citation_distribution.hpp"
#include "hcentral/core_metrics.hpp"
#include "hcentral/types.hpp"

namespace hcentral {

/// One imported index-table row: the indicators as published, with
/// per-radius values that may be missing ("-" cells).
struct PrecomputedSnapshot {
  int h = 0;
  Count cited_papers = 0;
  Count total_citations = 0;
  std::vector<std::optional<Count>> area;      ///< index j-1
  std::vector<std::optional<Count>> interval;  ///< index j-1

  bool operator==(const PrecomputedSnapshot&) const = default;
};

/// An author's record at one epoch. Either raw per-paper citations (every
/// indicator is computed) or a precomputed index-table row (indicators are
/// taken as published; the upper/lower tail split is unavailable).
class Snapshot {
 public:
  explicit Snapshot(CitationDistribution distribution);
  explicit Snapshot(PrecomputedSnapshot precomputed);

  int h() const noexcept { return h_; }
  Count cited_papers() const noexcept { return cited_papers_; }
  Count total_citations() const noexcept { return total_citations_; }

  /// A_j, or nullopt when the radius is undefined (j outside 1..h-1) or the
  /// imported table has no value for it.
  std::optional<Count> area(int radius) const;
  std::optional<Count> interval(int radius) const;

  bool has_distribution() const noexcept;
  /// Raw citations; throws Error for precomputed snapshots.
  const CitationDistribution& distribution() const;

  /// Full profile; engaged only for raw-backed snapshots.
  const std::optional<IndexProfile>& profile() const noexcept { return profile_; }

  /// Equality compares the underlying source data.
  bool operator==(const Snapshot& other) const { return source_ == other.source_; }

 private:
  std::variant<CitationDistribution, PrecomputedSnapshot> source_;
  int h_ = 0;
  Count cited_papers_ = 0;
  Count total_citations_ = 0;
  std::optional<IndexProfile> profile_;
  std::optional<RadiusSeries> series_;
};

/// A set of authors, each with snapshots keyed by epoch label. Epoch labels
/// are ordered by their declared sequence (first appearance unless
/// set_epoch_order is used). Iteration orders are deterministic: authors
/// sort lexicographically (byte-wise), epochs follow the declared order.
class Cohort {
 public:
  /// Registers the epoch if new and stores the snapshot.
  /// Throws Error when (author, epoch) is already present.
  void add_snapshot(const std::string& author, const std::string& epoch, Snapshot snapshot);

  /// Appends the epoch to the declared order if not yet known.
  void declare_epoch(const std::string& epoch);

  /// Replaces the declared order; must be a permutation of the known epochs.
  void set_epoch_order(const std::vector<std::string>& epochs);

  const std::vector<std::string>& epochs() const noexcept { return epochs_; }

  /// Position of the epoch in the declared order.
  std::optional<std::size_t> epoch_position(const std::string& epoch) const;

  std::size_t author_count() const noexcept { return authors_.size(); }
  bool empty() const noexcept { return authors_.empty(); }

  /// Author ids in lexicographic (byte-wise) order.
  std::vector<std::string> author_ids() const;

  const Snapshot* find(const std::string& author, const std::string& epoch) const;

  const std::map<std::string, std::map<std::string, Snapshot>>& authors() const noexcept {
    return authors_;
  }

  /// Non-fatal import diagnostics (e.g. non-monotone imported series).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  void add_warning(std::string warning) { warnings_.push_back(std::move(warning)); }

  /// Data equality; warnings are diagnostics and do not participate.
  bool operator==(const Cohort& other) const {
    return authors_ == other.authors_ && epochs_ == other.epochs_;
  }

 private:
  std::map<std::string, std::map<std::string, Snapshot>> authors_;
  std::vector<std::string> epochs_;
  std::vector<std::string> warnings_;
};

}  // namespace hcentral
