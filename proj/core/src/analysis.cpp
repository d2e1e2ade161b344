#include "hcentral/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hcentral {
namespace {

struct CenteredSums {
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
};

CenteredSums centered_sums(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  CenteredSums s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    s.sxx += dx * dx;
    s.syy += dy * dy;
    s.sxy += dx * dy;
  }
  return s;
}

}  // namespace

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("samples must have equal length");
  if (x.size() < 2) return std::nullopt;
  const CenteredSums s = centered_sums(x, y);
  if (s.sxx == 0.0 || s.syy == 0.0) return std::nullopt;
  return s.sxy / std::sqrt(s.sxx * s.syy);
}

std::string to_string(RadiusIndexKind kind) {
  return kind == RadiusIndexKind::area ? "area" : "interval";
}

std::string to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::area: return "area";
    case IndexKind::interval: return "interval";
    case IndexKind::h: return "h";
  }
  return "h";
}

RadiusIndexKind parse_radius_index_kind(const std::string& name) {
  if (name == "area") return RadiusIndexKind::area;
  if (name == "interval") return RadiusIndexKind::interval;
  throw Error("unknown index kind \"" + name + "\" (expected area or interval)");
}

std::map<std::string, std::optional<Count>> index_vectors(const Cohort& cohort, IndexKind kind,
                                                          const std::string& epoch,
                                                          std::optional<int> radius) {
  if (!cohort.epoch_position(epoch).has_value()) throw Error("unknown epoch \"" + epoch + "\"");
  if (kind == IndexKind::h) {
    if (radius.has_value()) throw std::invalid_argument("radius is not a parameter of h");
  } else {
    if (!radius.has_value()) throw std::invalid_argument("radius required for area/interval");
    if (*radius < 1) throw std::invalid_argument("radius must be at least 1");
  }
  std::map<std::string, std::optional<Count>> out;
  for (const auto& [author, snapshots] : cohort.authors()) {
    const auto it = snapshots.find(epoch);
    if (it == snapshots.end()) {
      out.emplace(author, std::nullopt);
      continue;
    }
    const Snapshot& s = it->second;
    switch (kind) {
      case IndexKind::h: out.emplace(author, static_cast<Count>(s.h())); break;
      case IndexKind::area: out.emplace(author, s.area(*radius)); break;
      case IndexKind::interval: out.emplace(author, s.interval(*radius)); break;
    }
  }
  return out;
}

CorrelationMatrix::CorrelationMatrix(RadiusIndexKind kind, std::string from_epoch,
                                     std::string to_epoch, int max_radius, int min_pairs)
    : kind_(kind),
      from_epoch_(std::move(from_epoch)),
      to_epoch_(std::move(to_epoch)),
      max_radius_(max_radius),
      min_pairs_(min_pairs),
      cells_(static_cast<std::size_t>(max_radius) * static_cast<std::size_t>(max_radius)) {
  if (max_radius < 1) throw std::invalid_argument("max_radius must be at least 1");
}

const CorrelationCell& CorrelationMatrix::cell(int from_radius, int to_radius) const {
  if (from_radius < 1 || from_radius > max_radius_ || to_radius < 1 || to_radius > max_radius_) {
    throw std::invalid_argument("radius outside the matrix bounds");
  }
  return cells_[static_cast<std::size_t>(from_radius - 1) * static_cast<std::size_t>(max_radius_) +
                static_cast<std::size_t>(to_radius - 1)];
}

CorrelationCell& CorrelationMatrix::cell(int from_radius, int to_radius) {
  return const_cast<CorrelationCell&>(std::as_const(*this).cell(from_radius, to_radius));
}

namespace {

void require_epoch_pair(const Cohort& cohort, const std::string& from_epoch,
                        const std::string& to_epoch) {
  const auto from_pos = cohort.epoch_position(from_epoch);
  if (!from_pos.has_value()) throw Error("unknown epoch \"" + from_epoch + "\"");
  const auto to_pos = cohort.epoch_position(to_epoch);
  if (!to_pos.has_value()) throw Error("unknown epoch \"" + to_epoch + "\"");
  if (*from_pos >= *to_pos) {
    throw Error("epoch \"" + from_epoch + "\" must precede \"" + to_epoch + "\"");
  }
}

void require_options(const CorrelationOptions& options) {
  if (options.max_radius < 1) throw std::invalid_argument("max_radius must be at least 1");
  if (options.min_pairs < 2) throw std::invalid_argument("min_pairs must be at least 2");
}

CorrelationCell correlate_available(const std::vector<std::optional<Count>>& from_values,
                                    const std::vector<std::optional<Count>>& to_values,
                                    int min_pairs) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < from_values.size(); ++i) {
    if (from_values[i].has_value() && to_values[i].has_value()) {
      x.push_back(static_cast<double>(*from_values[i]));
      y.push_back(static_cast<double>(*to_values[i]));
    }
  }
  CorrelationCell cell;
  cell.pairs = static_cast<int>(x.size());
  if (cell.pairs >= min_pairs) cell.value = pearson(x, y);
  return cell;
}

}  // namespace

CorrelationMatrix correlate_radius_indexes(const Cohort& cohort, RadiusIndexKind kind,
                                           const std::string& from_epoch,
                                           const std::string& to_epoch,
                                           const CorrelationOptions& options) {
  require_options(options);
  require_epoch_pair(cohort, from_epoch, to_epoch);

  const auto ids = cohort.author_ids();
  const auto values_at = [&](const std::string& epoch, int radius) {
    std::vector<std::optional<Count>> values;
    values.reserve(ids.size());
    for (const auto& id : ids) {
      const Snapshot* s = cohort.find(id, epoch);
      if (s == nullptr) {
        values.push_back(std::nullopt);
      } else {
        values.push_back(kind == RadiusIndexKind::area ? s->area(radius) : s->interval(radius));
      }
    }
    return values;
  };

  std::vector<std::vector<std::optional<Count>>> from_values;
  std::vector<std::vector<std::optional<Count>>> to_values;
  from_values.reserve(static_cast<std::size_t>(options.max_radius));
  to_values.reserve(static_cast<std::size_t>(options.max_radius));
  for (int radius = 1; radius <= options.max_radius; ++radius) {
    from_values.push_back(values_at(from_epoch, radius));
    to_values.push_back(values_at(to_epoch, radius));
  }

  CorrelationMatrix matrix(kind, from_epoch, to_epoch, options.max_radius, options.min_pairs);
  for (int j = 1; j <= options.max_radius; ++j) {
    for (int k = 1; k <= options.max_radius; ++k) {
      matrix.cell(j, k) =
          correlate_available(from_values[static_cast<std::size_t>(j) - 1],
                              to_values[static_cast<std::size_t>(k) - 1], options.min_pairs);
    }
  }
  return matrix;
}

CorrelationCell correlate_h(const Cohort& cohort, const std::string& from_epoch,
                            const std::string& to_epoch, const CorrelationOptions& options) {
  require_options(options);
  require_epoch_pair(cohort, from_epoch, to_epoch);
  const auto from_values = index_vectors(cohort, IndexKind::h, from_epoch);
  const auto to_values = index_vectors(cohort, IndexKind::h, to_epoch);
  std::vector<std::optional<Count>> x;
  std::vector<std::optional<Count>> y;
  for (const auto& [author, value] : from_values) {
    x.push_back(value);
    y.push_back(to_values.at(author));
  }
  return correlate_available(x, y, options.min_pairs);
}

std::optional<double> DifferenceGrid::cell(int from_radius, int to_radius) const {
  if (from_radius < 1 || from_radius > max_radius || to_radius < 1 || to_radius > max_radius) {
    throw std::invalid_argument("radius outside the grid bounds");
  }
  return cells[static_cast<std::size_t>(from_radius - 1) * static_cast<std::size_t>(max_radius) +
               static_cast<std::size_t>(to_radius - 1)];
}

int DifferenceGrid::available_count() const {
  return static_cast<int>(
      std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.has_value(); }));
}

int DifferenceGrid::negative_count() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                        [](const auto& c) { return c.has_value() && *c < 0.0; }));
}

DifferenceGrid matrix_difference(const CorrelationMatrix& a, const CorrelationMatrix& b) {
  if (a.from_epoch() != b.from_epoch() || a.to_epoch() != b.to_epoch() ||
      a.max_radius() != b.max_radius()) {
    throw Error("difference requires matrices over the same epochs and radius bound");
  }
  DifferenceGrid grid;
  grid.from_epoch = a.from_epoch();
  grid.to_epoch = a.to_epoch();
  grid.max_radius = a.max_radius();
  grid.cells.resize(static_cast<std::size_t>(grid.max_radius) *
                    static_cast<std::size_t>(grid.max_radius));
  for (int j = 1; j <= grid.max_radius; ++j) {
    for (int k = 1; k <= grid.max_radius; ++k) {
      const auto& av = a.cell(j, k).value;
      const auto& bv = b.cell(j, k).value;
      if (av.has_value() && bv.has_value()) {
        grid.cells[static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(grid.max_radius) +
                   static_cast<std::size_t>(k - 1)] = *av - *bv;
      }
    }
  }
  return grid;
}

OptimalRadiusResult optimal_radius(const CorrelationMatrix& matrix) {
  OptimalRadiusResult result;
  for (int j = 1; j <= matrix.max_radius(); ++j) {
    double sum = 0.0;
    int cells = 0;
    for (int k = j; k <= matrix.max_radius(); ++k) {
      const auto& value = matrix.cell(j, k).value;
      if (value.has_value()) {
        sum += *value;
        ++cells;
      }
    }
    if (cells > 0) result.scores.push_back({j, sum / cells, cells});
  }
  if (result.scores.empty()) {
    throw Error("insufficient data: no radius has an available correlation");
  }
  const auto best = std::max_element(
      result.scores.begin(), result.scores.end(),
      [](const RadiusScore& a, const RadiusScore& b) { return a.score < b.score; });
  result.best_radius = best->radius;
  result.best_score = best->score;
  return result;
}

OptimalRadiusResult optimal_radius(const Cohort& cohort, RadiusIndexKind kind,
                                   const std::string& from_epoch, const std::string& to_epoch,
                                   const CorrelationOptions& options) {
  return optimal_radius(correlate_radius_indexes(cohort, kind, from_epoch, to_epoch, options));
}

int half_mean_h_heuristic(const Cohort& cohort, const std::string& epoch) {
  if (!cohort.epoch_position(epoch).has_value()) throw Error("unknown epoch \"" + epoch + "\"");
  double sum = 0.0;
  int n = 0;
  for (const auto& [author, snapshots] : cohort.authors()) {
    const auto it = snapshots.find(epoch);
    if (it == snapshots.end()) continue;
    sum += static_cast<double>(it->second.h());
    ++n;
  }
  if (n == 0) throw Error("no snapshots at epoch \"" + epoch + "\"");
  const int half = static_cast<int>(std::floor(sum / n / 2.0));
  return std::max(1, half);
}

RegressionResult regress_impact_on_production(const Cohort& cohort, const std::string& epoch) {
  if (!cohort.epoch_position(epoch).has_value()) throw Error("unknown epoch \"" + epoch + "\"");
  RegressionResult result;
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& [author, snapshots] : cohort.authors()) {
    const auto it = snapshots.find(epoch);
    if (it == snapshots.end()) continue;
    RegressionRow row;
    row.author = author;
    row.papers = static_cast<double>(it->second.cited_papers());
    row.citations = static_cast<double>(it->second.total_citations());
    result.rows.push_back(row);
    x.push_back(row.papers);
    y.push_back(row.citations);
  }
  if (result.rows.size() < 3) throw Error("regression requires at least three authors");
  const CenteredSums s = centered_sums(x, y);
  if (s.sxx == 0.0) throw Error("regression undefined: paper counts are constant");

  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());

  result.fit.slope = s.sxy / s.sxx;
  result.fit.intercept = my - result.fit.slope * mx;
  result.fit.r = s.syy == 0.0 ? 0.0 : s.sxy / std::sqrt(s.sxx * s.syy);
  result.fit.n = static_cast<int>(result.rows.size());
  for (auto& row : result.rows) {
    row.fitted = result.fit.slope * row.papers + result.fit.intercept;
    row.residual = row.citations - row.fitted;
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const RegressionRow& a, const RegressionRow& b) {
              if (a.residual != b.residual) return a.residual > b.residual;
              return a.author < b.author;
            });
  return result;
}

}  // namespace hcentral
