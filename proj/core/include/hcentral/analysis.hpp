#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcentral/cohort.hpp"
#include "hcentral/types.hpp"

namespace hcentral {

/// Pearson product-moment correlation, two-pass over centered sums, so it
/// is exactly symmetric under argument swap. Returns nullopt when fewer
/// than two points or either sample has zero variance (the correlation is
/// undefined there, not zero). Throws std::invalid_argument on length
/// mismatch.
std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y);

enum class RadiusIndexKind { area, interval };
enum class IndexKind { area, interval, h };

std::string to_string(RadiusIndexKind kind);
std::string to_string(IndexKind kind);
RadiusIndexKind parse_radius_index_kind(const std::string& name);

/// One value per cohort author at the epoch: A_radius, I_radius, or h.
/// nullopt when the author misses the epoch or the radius is undefined /
/// unrecorded for them. radius is required for area and interval and must
/// be absent for h (std::invalid_argument otherwise). Throws Error on an
/// unknown epoch.
std::map<std::string, std::optional<Count>> index_vectors(const Cohort& cohort, IndexKind kind,
                                                          const std::string& epoch,
                                                          std::optional<int> radius = std::nullopt);

/// One correlation-matrix cell plus the number of complete pairs behind it.
/// pairs is recorded even when the value is suppressed.
struct CorrelationCell {
  std::optional<double> value;
  int pairs = 0;

  bool operator==(const CorrelationCell&) const = default;
};

struct CorrelationOptions {
  int max_radius = 10;
  /// Cells with fewer complete pairs than this stay unavailable.
  int min_pairs = 9;
};

/// Cross-epoch correlation grid for one radius-indexed indicator family.
/// cell(j, k) correlates index_j at `from` with index_k at `to`, over
/// authors where both values exist (pairwise-complete deletion per cell).
class CorrelationMatrix {
 public:
  CorrelationMatrix(RadiusIndexKind kind, std::string from_epoch, std::string to_epoch,
                    int max_radius, int min_pairs);

  RadiusIndexKind kind() const noexcept { return kind_; }
  const std::string& from_epoch() const noexcept { return from_epoch_; }
  const std::string& to_epoch() const noexcept { return to_epoch_; }
  int max_radius() const noexcept { return max_radius_; }
  int min_pairs() const noexcept { return min_pairs_; }

  /// 1-based radii; throws std::invalid_argument outside 1..max_radius.
  const CorrelationCell& cell(int from_radius, int to_radius) const;
  CorrelationCell& cell(int from_radius, int to_radius);

 private:
  RadiusIndexKind kind_;
  std::string from_epoch_;
  std::string to_epoch_;
  int max_radius_ = 0;
  int min_pairs_ = 0;
  std::vector<CorrelationCell> cells_;
};

/// Builds the cross-epoch matrix. The from epoch must precede the to epoch
/// in the cohort's declared order (Error otherwise, as for unknown epochs).
CorrelationMatrix correlate_radius_indexes(const Cohort& cohort, RadiusIndexKind kind,
                                           const std::string& from_epoch,
                                           const std::string& to_epoch,
                                           const CorrelationOptions& options = {});

/// Correlation between h at `from` and h at `to`, pairwise-complete over
/// authors present at both epochs. Same epoch-order requirement.
CorrelationCell correlate_h(const Cohort& cohort, const std::string& from_epoch,
                            const std::string& to_epoch, const CorrelationOptions& options = {});

/// Cellwise area minus interval correlations; a cell is present only where
/// both inputs are available.
struct DifferenceGrid {
  std::string from_epoch;
  std::string to_epoch;
  int max_radius = 0;
  std::vector<std::optional<double>> cells;  ///< row-major, max_radius squared

  std::optional<double> cell(int from_radius, int to_radius) const;
  int available_count() const;
  int negative_count() const;
};

/// Requires matching epochs and max_radius (throws Error).
DifferenceGrid matrix_difference(const CorrelationMatrix& a, const CorrelationMatrix& b);

struct RadiusScore {
  int radius = 0;
  double score = 0.0;  ///< mean of available cells (j, k) with k >= j
  int cells = 0;       ///< cells contributing to the mean

  bool operator==(const RadiusScore&) const = default;
};

struct OptimalRadiusResult {
  int best_radius = 0;
  double best_score = 0.0;
  std::vector<RadiusScore> scores;  ///< only radii with at least one cell
};

/// Scores each source radius j by the mean of the available cells (j, k)
/// with k >= j and picks the argmax (ties resolve to the smallest j).
/// Throws Error ("insufficient data") when no radius has any available
/// cell.
OptimalRadiusResult optimal_radius(const CorrelationMatrix& matrix);
OptimalRadiusResult optimal_radius(const Cohort& cohort, RadiusIndexKind kind,
                                   const std::string& from_epoch, const std::string& to_epoch,
                                   const CorrelationOptions& options = {});

/// max(1, floor(mean h / 2)) over the cohort at the epoch; a rule of thumb
/// for how far out the central indexes stay informative. Throws Error when
/// the epoch is unknown or no author has a snapshot there.
int half_mean_h_heuristic(const Cohort& cohort, const std::string& epoch);

/// Simple least-squares line y = slope * x + intercept.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r = 0.0;  ///< correlation between x and y
  int n = 0;
};

struct RegressionRow {
  std::string author;
  double papers = 0.0;     ///< x: cited papers
  double citations = 0.0;  ///< y: total citations
  double fitted = 0.0;
  double residual = 0.0;  ///< positive: more citations than production predicts
};

struct RegressionResult {
  LinearFit fit;
  std::vector<RegressionRow> rows;  ///< residual descending, author ascending on ties
};

/// OLS of total citations on cited papers across authors at one epoch.
/// Requires at least three authors at the epoch and non-constant paper
/// counts (throws Error).
RegressionResult regress_impact_on_production(const Cohort& cohort, const std::string& epoch);

}  // namespace hcentral
