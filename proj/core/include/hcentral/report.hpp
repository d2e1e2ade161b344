#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcentral/analysis.hpp"
#include "hcentral/cohort.hpp"
#include "hcentral/core_metrics.hpp"
#include "hcentral/io.hpp"
#include "hcentral/types.hpp"

namespace hcentral {

/// Flattened per-snapshot indicator row for the profile table. The tail
/// split (U, L) is only known for distribution-backed snapshots; everything
/// else derives from h, N_p, N_c alone.
struct ProfileRow {
  std::string author;
  std::string epoch;
  int h = 0;
  Count h_square = 0;
  std::optional<Count> upper_tail;
  std::optional<Count> lower_tail;
  Count cited_papers = 0;
  Count total_citations = 0;
  std::optional<double> mean_citations;
  std::optional<double> tail_ratio;
  TailClass tail_class = TailClass::undefined;
};

/// Epoch-major (declared order), authors lexicographic within an epoch.
std::vector<ProfileRow> profile_rows(const Cohort& cohort, const DecomposeOptions& options = {});

/// Rendering policy, both formats: authors sorted, radii ascending,
/// correlations with 3 decimals in csv and full precision in json, other
/// derived reals with 6 decimals in csv; missing values are "-" in csv and
/// null in json. Every csv ends with a trailing newline.
std::string render_profile_table(const std::vector<ProfileRow>& rows, Format format);

/// The correlate command's payload: both indicator families plus their
/// cellwise difference over one epoch pair.
struct CorrelationBundle {
  CorrelationMatrix area;
  CorrelationMatrix interval;
  DifferenceGrid difference;
};

CorrelationBundle correlate_bundle(const Cohort& cohort, const std::string& from_epoch,
                                   const std::string& to_epoch,
                                   const CorrelationOptions& options = {});

/// csv: one rectangular table, rows keyed by a `matrix` discriminator
/// (area, area_n, interval, interval_n, difference) and the source radius.
std::string render_correlation_bundle(const CorrelationBundle& bundle, Format format);

std::string render_radius_report(const OptimalRadiusResult& result, RadiusIndexKind kind,
                                 const std::string& from_epoch, const std::string& to_epoch,
                                 int heuristic_radius, Format format);

std::string render_regression(const RegressionResult& result, const std::string& epoch,
                              Format format);

/// Rank/citation pairs for every distribution-backed snapshot, long form:
/// author, epoch, rank, citations. Throws Error when the cohort holds a
/// precomputed snapshot (no curve exists for those).
std::string render_curves(const Cohort& cohort, int max_rank, Format format);

}  // namespace hcentral
