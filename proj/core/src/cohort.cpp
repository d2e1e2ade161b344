#include "hcentral/cohort.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcentral {
namespace {

void validate_precomputed(const PrecomputedSnapshot& p) {
  if (p.h < 0) throw std::invalid_argument("h must be non-negative");
  if (p.cited_papers < 0 || p.total_citations < 0) {
    throw std::invalid_argument("paper and citation counts must be non-negative");
  }
  const auto check_values = [&](const std::vector<std::optional<Count>>& values,
                                const char* label) {
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
      if (!values[idx].has_value()) continue;
      const int radius = static_cast<int>(idx) + 1;
      if (radius > p.h - 1) {
        throw Error("radius undefined: " + std::string(label) + " value present at radius " +
                    std::to_string(radius) + " but h=" + std::to_string(p.h));
      }
      if (*values[idx] < 0) throw std::invalid_argument("index values must be non-negative");
    }
  };
  check_values(p.area, "area");
  check_values(p.interval, "interval");
}

void trim_trailing_missing(std::vector<std::optional<Count>>& values) {
  while (!values.empty() && !values.back().has_value()) values.pop_back();
}

}  // namespace

Snapshot::Snapshot(CitationDistribution distribution) : source_(std::move(distribution)) {
  const auto& d = std::get<CitationDistribution>(source_);
  profile_ = decompose(d);
  series_ = radius_series(d);
  h_ = profile_->h;
  cited_papers_ = profile_->cited_papers;
  total_citations_ = profile_->total_citations;
}

Snapshot::Snapshot(PrecomputedSnapshot precomputed) : source_(std::move(precomputed)) {
  auto& p = std::get<PrecomputedSnapshot>(source_);
  validate_precomputed(p);
  trim_trailing_missing(p.area);
  trim_trailing_missing(p.interval);
  h_ = p.h;
  cited_papers_ = p.cited_papers;
  total_citations_ = p.total_citations;
}

std::optional<Count> Snapshot::area(int radius) const {
  if (radius < 1 || radius > h_ - 1) return std::nullopt;
  if (const auto* p = std::get_if<PrecomputedSnapshot>(&source_)) {
    const auto idx = static_cast<std::size_t>(radius) - 1;
    return idx < p->area.size() ? p->area[idx] : std::nullopt;
  }
  return series_->area(radius);
}

std::optional<Count> Snapshot::interval(int radius) const {
  if (radius < 1 || radius > h_ - 1) return std::nullopt;
  if (const auto* p = std::get_if<PrecomputedSnapshot>(&source_)) {
    const auto idx = static_cast<std::size_t>(radius) - 1;
    return idx < p->interval.size() ? p->interval[idx] : std::nullopt;
  }
  return series_->interval(radius);
}

bool Snapshot::has_distribution() const noexcept {
  return std::holds_alternative<CitationDistribution>(source_);
}

const CitationDistribution& Snapshot::distribution() const {
  if (const auto* d = std::get_if<CitationDistribution>(&source_)) return *d;
  throw Error("snapshot carries precomputed indexes, not raw citations");
}

void Cohort::add_snapshot(const std::string& author, const std::string& epoch,
                          Snapshot snapshot) {
  if (author.empty()) throw std::invalid_argument("author id must be non-empty");
  if (epoch.empty()) throw std::invalid_argument("epoch label must be non-empty");
  auto& row = authors_[author];
  if (row.contains(epoch)) {
    throw Error("duplicate snapshot for author \"" + author + "\" at epoch \"" + epoch + "\"");
  }
  declare_epoch(epoch);
  row.emplace(epoch, std::move(snapshot));
}

void Cohort::declare_epoch(const std::string& epoch) {
  if (epoch.empty()) throw std::invalid_argument("epoch label must be non-empty");
  if (std::find(epochs_.begin(), epochs_.end(), epoch) == epochs_.end()) {
    epochs_.push_back(epoch);
  }
}

void Cohort::set_epoch_order(const std::vector<std::string>& epochs) {
  auto sorted_new = epochs;
  std::sort(sorted_new.begin(), sorted_new.end());
  if (std::adjacent_find(sorted_new.begin(), sorted_new.end()) != sorted_new.end()) {
    throw Error("epoch order contains duplicates");
  }
  auto sorted_known = epochs_;
  std::sort(sorted_known.begin(), sorted_known.end());
  if (sorted_new != sorted_known) {
    throw Error("epoch order must be a permutation of the known epochs");
  }
  epochs_ = epochs;
}

std::optional<std::size_t> Cohort::epoch_position(const std::string& epoch) const {
  const auto it = std::find(epochs_.begin(), epochs_.end(), epoch);
  if (it == epochs_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - epochs_.begin());
}

std::vector<std::string> Cohort::author_ids() const {
  std::vector<std::string> ids;
  ids.reserve(authors_.size());
  for (const auto& [id, snapshots] : authors_) ids.push_back(id);
  return ids;
}

const Snapshot* Cohort::find(const std::string& author, const std::string& epoch) const {
  const auto author_it = authors_.find(author);
  if (author_it == authors_.end()) return nullptr;
  const auto epoch_it = author_it->second.find(epoch);
  if (epoch_it == author_it->second.end()) return nullptr;
  return &epoch_it->second;
}

}  // namespace hcentral
