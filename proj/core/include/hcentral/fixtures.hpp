#pragma once

#include <string>
#include <vector>

#include "hcentral/cohort.hpp"
#include "hcentral/types.hpp"

namespace hcentral {

/// One author-epoch row of the bundled reference dataset: 15 researchers
/// observed at three snapshots (1999, 2004, 2009) with production (cited
/// papers), impact (total citations), h, and the published h-square value.
struct ReferenceProductionRow {
  std::string author;
  int first_publication_year = 0;
  std::string epoch;
  Count cited_papers = 0;
  Count total_citations = 0;
  int h = 0;
  Count h_square = 0;
};

/// The published per-epoch averages of the reference dataset (rounded to
/// one decimal in the source material).
struct ReferenceAverageRow {
  std::string epoch;
  double cited_papers = 0.0;
  double total_citations = 0.0;
  double h = 0.0;
  double h_square = 0.0;
};

/// 45 rows, author-major (lexicographic), epochs ascending.
const std::vector<ReferenceProductionRow>& reference_production();

/// Printed averages per epoch (epochs ascending) and of the first
/// publication year.
const std::vector<ReferenceAverageRow>& reference_printed_averages();
double reference_printed_mean_first_year();

/// The reference dataset in index-table csv form (central area and
/// interval values to radius 10; "-" where the radius reaches past h-1).
/// Parseable by read_cohort_csv; embedded verbatim.
const std::string& reference_index_table_csv();

/// The parsed reference cohort: precomputed snapshots for all 45
/// author-epoch pairs, epoch order 1999, 2004, 2009.
Cohort reference_cohort();

}  // namespace hcentral
