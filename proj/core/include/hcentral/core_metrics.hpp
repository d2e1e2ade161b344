#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hcentral/citation_distribution.hpp"
#include "hcentral/types.hpp"

namespace hcentral {

/// Weight of the distribution tails relative to the Hirsch core,
/// classified from the ratio N_c / h^2: light below 3, heavy above 5,
/// intermediate in between (boundary values included).
enum class TailClass { light, intermediate, heavy, undefined };

std::string_view to_string(TailClass c) noexcept;

/// Classification of N_c / h^2; boundary ratios 3 and 5 are intermediate.
TailClass classify_tail(double tail_ratio) noexcept;

/// Scalar indicators of one citation distribution. The exact identity
/// total_citations = core_lower_bound + upper_tail + lower_tail always holds.
struct IndexProfile {
  int h = 0;
  Count core_lower_bound = 0;  ///< H = h^2
  Count upper_tail = 0;        ///< U: Hirsch-core citations in excess of H
  Count lower_tail = 0;        ///< L: citations of papers outside the core
  Count cited_papers = 0;      ///< N_p
  Count total_citations = 0;   ///< N_c
  std::optional<double> mean_citations;  ///< n_c = N_c / N_p; absent when N_p = 0
  std::optional<double> tail_ratio;      ///< N_c / H; absent when h = 0
  TailClass tail_class = TailClass::undefined;
};

struct DecomposeOptions {
  /// Count zero-cited papers in cited_papers (and therefore in
  /// mean_citations). Affects nothing else.
  bool count_uncited_papers = false;
};

/// Central area and interval indexes A_j, I_j for every valid radius
/// j = 1..h-1. Empty when h <= 1.
class RadiusSeries {
 public:
  RadiusSeries() = default;
  RadiusSeries(int h, std::vector<Count> area, std::vector<Count> interval);

  int h() const noexcept { return h_; }

  /// Largest valid radius, h-1 (0 when no radius is valid).
  int max_radius() const noexcept { return static_cast<int>(area_.size()); }

  /// A_j; throws Error("radius undefined...") outside 1..h-1.
  Count area(int radius) const;
  /// I_j; throws Error("radius undefined...") outside 1..h-1.
  Count interval(int radius) const;

  /// A_1..A_{h-1}, index j-1.
  const std::vector<Count>& area_values() const noexcept { return area_; }
  const std::vector<Count>& interval_values() const noexcept { return interval_; }

  bool operator==(const RadiusSeries&) const = default;

 private:
  int h_ = 0;
  std::vector<Count> area_;
  std::vector<Count> interval_;
};

/// Largest i such that c_i >= i; 0 for empty or all-zero distributions.
int h_index(const CitationDistribution& d);

/// N_c^j: sum of the j most cited papers; ranks past the end contribute 0.
/// Throws std::invalid_argument for negative j.
Count cumulative_citations(const CitationDistribution& d, int j);

/// Full H/U/L decomposition plus the derived rationals and tail class.
IndexProfile decompose(const CitationDistribution& d, DecomposeOptions options = {});

/// A_j = (h-j) * c_{h-j} + sum_{i=h-j+1}^{h+j} c_i.
/// Throws Error("radius undefined...") when j is outside 1..h-1.
Count central_area_index(const CitationDistribution& d, int radius);

/// I_j = sum_{i=h-j}^{h+j} c_i.
/// Throws Error("radius undefined...") when j is outside 1..h-1.
Count central_interval_index(const CitationDistribution& d, int radius);

/// Both series over the full radius domain.
RadiusSeries radius_series(const CitationDistribution& d);

struct CurvePoint {
  int rank = 0;
  Count citations = 0;
  bool operator==(const CurvePoint&) const = default;
};

/// (rank, citations) pairs for ranks 1..min(max_rank, N_p), i.e. the
/// citation curve truncated for display. Throws std::invalid_argument when
/// max_rank < 1.
std::vector<CurvePoint> citation_curve_points(const CitationDistribution& d, int max_rank);

}  // namespace hcentral
