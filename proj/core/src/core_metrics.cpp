#include "hcentral/core_metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hcentral {
namespace {

[[noreturn]] void throw_radius_undefined(int radius, int h) {
  throw Error("radius undefined: " + std::to_string(radius) + " outside 1.." +
              std::to_string(h - 1) + " for h=" + std::to_string(h));
}

}  // namespace

std::string_view to_string(TailClass c) noexcept {
  switch (c) {
    case TailClass::light: return "light";
    case TailClass::intermediate: return "intermediate";
    case TailClass::heavy: return "heavy";
    case TailClass::undefined: return "undefined";
  }
  return "undefined";
}

TailClass classify_tail(double tail_ratio) noexcept {
  if (tail_ratio < 3.0) return TailClass::light;
  if (tail_ratio > 5.0) return TailClass::heavy;
  return TailClass::intermediate;
}

int h_index(const CitationDistribution& d) {
  // c_i - i strictly decreases, so the predicate c_i >= i is monotone and
  // binary search finds its last true point.
  int lo = 0;
  int hi = d.size();
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (d.at(mid) >= mid) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

Count cumulative_citations(const CitationDistribution& d, int j) {
  if (j < 0) throw std::invalid_argument("prefix length must be non-negative");
  const int upto = std::min(j, d.size());
  Count sum = 0;
  for (int i = 1; i <= upto; ++i) sum += d.at(i);
  return sum;
}

IndexProfile decompose(const CitationDistribution& d, DecomposeOptions options) {
  IndexProfile p;
  p.h = h_index(d);
  p.core_lower_bound = static_cast<Count>(p.h) * p.h;
  const Count core_citations = cumulative_citations(d, p.h);
  p.upper_tail = core_citations - p.core_lower_bound;
  p.total_citations = d.total();
  p.lower_tail = p.total_citations - core_citations;
  p.cited_papers = options.count_uncited_papers ? d.size() : d.cited_papers();
  if (p.cited_papers > 0) {
    p.mean_citations = static_cast<double>(p.total_citations) / static_cast<double>(p.cited_papers);
  }
  if (p.h > 0) {
    const double ratio =
        static_cast<double>(p.total_citations) / static_cast<double>(p.core_lower_bound);
    p.tail_ratio = ratio;
    p.tail_class = classify_tail(ratio);
  }
  return p;
}

Count central_area_index(const CitationDistribution& d, int radius) {
  const int h = h_index(d);
  if (radius < 1 || radius > h - 1) throw_radius_undefined(radius, h);
  Count sum = static_cast<Count>(h - radius) * d.at(h - radius);
  for (int i = h - radius + 1; i <= h + radius; ++i) sum += d.at(i);
  return sum;
}

Count central_interval_index(const CitationDistribution& d, int radius) {
  const int h = h_index(d);
  if (radius < 1 || radius > h - 1) throw_radius_undefined(radius, h);
  Count sum = 0;
  for (int i = h - radius; i <= h + radius; ++i) sum += d.at(i);
  return sum;
}

RadiusSeries::RadiusSeries(int h, std::vector<Count> area, std::vector<Count> interval)
    : h_(h), area_(std::move(area)), interval_(std::move(interval)) {
  const std::size_t expected = h >= 2 ? static_cast<std::size_t>(h - 1) : 0;
  if (area_.size() != expected || interval_.size() != expected) {
    throw std::invalid_argument("radius series must cover exactly 1..h-1");
  }
}

Count RadiusSeries::area(int radius) const {
  if (radius < 1 || radius > max_radius()) throw_radius_undefined(radius, h_);
  return area_[static_cast<std::size_t>(radius) - 1];
}

Count RadiusSeries::interval(int radius) const {
  if (radius < 1 || radius > max_radius()) throw_radius_undefined(radius, h_);
  return interval_[static_cast<std::size_t>(radius) - 1];
}

RadiusSeries radius_series(const CitationDistribution& d) {
  const int h = h_index(d);
  if (h <= 1) return RadiusSeries(h, {}, {});
  // prefix[k] = sum of the k top-ranked counts, k = 0..2h-1
  std::vector<Count> prefix(static_cast<std::size_t>(2 * h));
  prefix[0] = 0;
  for (int k = 1; k <= 2 * h - 1; ++k) {
    prefix[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k) - 1] + d.at(k);
  }
  std::vector<Count> area(static_cast<std::size_t>(h - 1));
  std::vector<Count> interval(static_cast<std::size_t>(h - 1));
  for (int j = 1; j <= h - 1; ++j) {
    const Count upper = prefix[static_cast<std::size_t>(h + j)];
    area[static_cast<std::size_t>(j) - 1] = static_cast<Count>(h - j) * d.at(h - j) + upper -
                                            prefix[static_cast<std::size_t>(h - j)];
    interval[static_cast<std::size_t>(j) - 1] = upper - prefix[static_cast<std::size_t>(h - j) - 1];
  }
  return RadiusSeries(h, std::move(area), std::move(interval));
}

std::vector<CurvePoint> citation_curve_points(const CitationDistribution& d, int max_rank) {
  if (max_rank < 1) throw std::invalid_argument("max_rank must be at least 1");
  const int last = static_cast<int>(std::min<Count>(max_rank, d.cited_papers()));
  std::vector<CurvePoint> points;
  points.reserve(static_cast<std::size_t>(last));
  for (int i = 1; i <= last; ++i) points.push_back({i, d.at(i)});
  return points;
}

}  // namespace hcentral
