#include "hcentral/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "hcentral/csv.hpp"

namespace hcentral {
namespace {

using nlohmann::json;

std::string fixed(double value, int places) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", places, value);
  return buffer;
}

std::string count_text(double value) {
  return std::to_string(static_cast<long long>(value));
}

/// Epoch-major walk in declared order, authors lexicographic.
template <typename Fn>
void for_each_snapshot(const Cohort& cohort, Fn&& fn) {
  for (const auto& epoch : cohort.epochs()) {
    for (const auto& [author, snapshots] : cohort.authors()) {
      const auto it = snapshots.find(epoch);
      if (it != snapshots.end()) fn(author, epoch, it->second);
    }
  }
}

json correlation_values(const CorrelationMatrix& matrix) {
  json rows = json::array();
  for (int j = 1; j <= matrix.max_radius(); ++j) {
    json row = json::array();
    for (int k = 1; k <= matrix.max_radius(); ++k) {
      const auto& value = matrix.cell(j, k).value;
      if (value.has_value()) {
        row.push_back(*value);
      } else {
        row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json correlation_pairs(const CorrelationMatrix& matrix) {
  json rows = json::array();
  for (int j = 1; j <= matrix.max_radius(); ++j) {
    json row = json::array();
    for (int k = 1; k <= matrix.max_radius(); ++k) row.push_back(matrix.cell(j, k).pairs);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<ProfileRow> profile_rows(const Cohort& cohort, const DecomposeOptions& options) {
  std::vector<ProfileRow> rows;
  for_each_snapshot(cohort, [&](const std::string& author, const std::string& epoch,
                                const Snapshot& snapshot) {
    ProfileRow row;
    row.author = author;
    row.epoch = epoch;
    if (snapshot.has_distribution()) {
      const IndexProfile p = decompose(snapshot.distribution(), options);
      row.h = p.h;
      row.h_square = p.core_lower_bound;
      row.upper_tail = p.upper_tail;
      row.lower_tail = p.lower_tail;
      row.cited_papers = p.cited_papers;
      row.total_citations = p.total_citations;
      row.mean_citations = p.mean_citations;
      row.tail_ratio = p.tail_ratio;
      row.tail_class = p.tail_class;
    } else {
      // imported rows carry no per-paper counts, so the tail split stays
      // unknown; everything else follows from h, Np, Nc
      row.h = snapshot.h();
      row.h_square = static_cast<Count>(snapshot.h()) * snapshot.h();
      row.cited_papers = snapshot.cited_papers();
      row.total_citations = snapshot.total_citations();
      if (row.cited_papers > 0) {
        row.mean_citations = static_cast<double>(row.total_citations) /
                             static_cast<double>(row.cited_papers);
      }
      if (row.h > 0) {
        row.tail_ratio = static_cast<double>(row.total_citations) /
                         static_cast<double>(row.h_square);
        row.tail_class = classify_tail(*row.tail_ratio);
      }
    }
    rows.push_back(std::move(row));
  });
  return rows;
}

std::string render_profile_table(const std::vector<ProfileRow>& rows, Format format) {
  if (format == Format::csv) {
    std::ostringstream out;
    out << "author,epoch,h,H,U,L,Np,Nc,nc,tail_class\n";
    for (const auto& row : rows) {
      out << csv::join({row.author, row.epoch, std::to_string(row.h),
                        std::to_string(row.h_square),
                        row.upper_tail.has_value() ? std::to_string(*row.upper_tail) : "-",
                        row.lower_tail.has_value() ? std::to_string(*row.lower_tail) : "-",
                        std::to_string(row.cited_papers), std::to_string(row.total_citations),
                        row.mean_citations.has_value() ? fixed(*row.mean_citations, 6) : "-",
                        std::string(to_string(row.tail_class))})
          << "\n";
    }
    return out.str();
  }
  json profiles = json::array();
  for (const auto& row : rows) {
    json entry;
    entry["author"] = row.author;
    entry["epoch"] = row.epoch;
    entry["h"] = row.h;
    entry["H"] = row.h_square;
    if (row.upper_tail.has_value()) entry["U"] = *row.upper_tail; else entry["U"] = nullptr;
    if (row.lower_tail.has_value()) entry["L"] = *row.lower_tail; else entry["L"] = nullptr;
    entry["Np"] = row.cited_papers;
    entry["Nc"] = row.total_citations;
    if (row.mean_citations.has_value()) entry["nc"] = *row.mean_citations;
    else entry["nc"] = nullptr;
    entry["tail_class"] = std::string(to_string(row.tail_class));
    profiles.push_back(std::move(entry));
  }
  json root;
  root["profiles"] = std::move(profiles);
  return root.dump(2) + "\n";
}

CorrelationBundle correlate_bundle(const Cohort& cohort, const std::string& from_epoch,
                                   const std::string& to_epoch,
                                   const CorrelationOptions& options) {
  CorrelationMatrix area =
      correlate_radius_indexes(cohort, RadiusIndexKind::area, from_epoch, to_epoch, options);
  CorrelationMatrix interval =
      correlate_radius_indexes(cohort, RadiusIndexKind::interval, from_epoch, to_epoch, options);
  DifferenceGrid difference = matrix_difference(area, interval);
  return {std::move(area), std::move(interval), std::move(difference)};
}

std::string render_correlation_bundle(const CorrelationBundle& bundle, Format format) {
  const int radius_bound = bundle.area.max_radius();
  if (format == Format::csv) {
    std::ostringstream out;
    std::vector<std::string> header = {"matrix", "from_radius"};
    for (int k = 1; k <= radius_bound; ++k) header.push_back("to_" + std::to_string(k));
    out << csv::join(header) << "\n";
    const auto value_rows = [&](const char* label, const CorrelationMatrix& matrix) {
      for (int j = 1; j <= radius_bound; ++j) {
        std::vector<std::string> fields = {label, std::to_string(j)};
        for (int k = 1; k <= radius_bound; ++k) {
          const auto& value = matrix.cell(j, k).value;
          fields.push_back(value.has_value() ? fixed(*value, 3) : "-");
        }
        out << csv::join(fields) << "\n";
      }
    };
    const auto pair_rows = [&](const char* label, const CorrelationMatrix& matrix) {
      for (int j = 1; j <= radius_bound; ++j) {
        std::vector<std::string> fields = {label, std::to_string(j)};
        for (int k = 1; k <= radius_bound; ++k) {
          fields.push_back(std::to_string(matrix.cell(j, k).pairs));
        }
        out << csv::join(fields) << "\n";
      }
    };
    value_rows("area", bundle.area);
    pair_rows("area_n", bundle.area);
    value_rows("interval", bundle.interval);
    pair_rows("interval_n", bundle.interval);
    for (int j = 1; j <= radius_bound; ++j) {
      std::vector<std::string> fields = {"difference", std::to_string(j)};
      for (int k = 1; k <= radius_bound; ++k) {
        const auto value = bundle.difference.cell(j, k);
        fields.push_back(value.has_value() ? fixed(*value, 3) : "-");
      }
      out << csv::join(fields) << "\n";
    }
    return out.str();
  }
  json root;
  root["from"] = bundle.area.from_epoch();
  root["to"] = bundle.area.to_epoch();
  root["max_radius"] = radius_bound;
  root["min_pairs"] = bundle.area.min_pairs();
  root["area"] = {{"values", correlation_values(bundle.area)},
                  {"pairs", correlation_pairs(bundle.area)}};
  root["interval"] = {{"values", correlation_values(bundle.interval)},
                      {"pairs", correlation_pairs(bundle.interval)}};
  json difference_rows = json::array();
  for (int j = 1; j <= radius_bound; ++j) {
    json row = json::array();
    for (int k = 1; k <= radius_bound; ++k) {
      const auto value = bundle.difference.cell(j, k);
      if (value.has_value()) {
        row.push_back(*value);
      } else {
        row.push_back(nullptr);
      }
    }
    difference_rows.push_back(std::move(row));
  }
  root["difference"] = {{"values", std::move(difference_rows)},
                        {"available", bundle.difference.available_count()},
                        {"negative", bundle.difference.negative_count()}};
  return root.dump(2) + "\n";
}

std::string render_radius_report(const OptimalRadiusResult& result, RadiusIndexKind kind,
                                 const std::string& from_epoch, const std::string& to_epoch,
                                 int heuristic_radius, Format format) {
  if (format == Format::csv) {
    std::ostringstream out;
    out << "row,radius,score,cells\n";
    for (const auto& score : result.scores) {
      out << csv::join({"score", std::to_string(score.radius), fixed(score.score, 6),
                        std::to_string(score.cells)})
          << "\n";
    }
    out << csv::join({"best", std::to_string(result.best_radius), fixed(result.best_score, 6),
                      "-"})
        << "\n";
    out << csv::join({"half_mean_h", std::to_string(heuristic_radius), "-", "-"}) << "\n";
    return out.str();
  }
  json root;
  root["kind"] = to_string(kind);
  root["from"] = from_epoch;
  root["to"] = to_epoch;
  root["aggregator"] = "mean over to_radius >= from_radius";
  root["best_radius"] = result.best_radius;
  root["best_score"] = result.best_score;
  root["half_mean_h"] = heuristic_radius;
  json scores = json::array();
  for (const auto& score : result.scores) {
    scores.push_back(
        {{"radius", score.radius}, {"score", score.score}, {"cells", score.cells}});
  }
  root["scores"] = std::move(scores);
  return root.dump(2) + "\n";
}

std::string render_regression(const RegressionResult& result, const std::string& epoch,
                              Format format) {
  if (format == Format::csv) {
    std::ostringstream out;
    out << "author,papers,citations,fitted,residual,slope,intercept,r,n\n";
    for (const auto& row : result.rows) {
      out << csv::join({row.author, count_text(row.papers), count_text(row.citations),
                        fixed(row.fitted, 6), fixed(row.residual, 6), fixed(result.fit.slope, 6),
                        fixed(result.fit.intercept, 6), fixed(result.fit.r, 6),
                        std::to_string(result.fit.n)})
          << "\n";
    }
    return out.str();
  }
  json root;
  root["epoch"] = epoch;
  root["fit"] = {{"slope", result.fit.slope},
                 {"intercept", result.fit.intercept},
                 {"r", result.fit.r},
                 {"n", result.fit.n}};
  json rows = json::array();
  for (const auto& row : result.rows) {
    rows.push_back({{"author", row.author},
                    {"papers", row.papers},
                    {"citations", row.citations},
                    {"fitted", row.fitted},
                    {"residual", row.residual}});
  }
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

std::string render_curves(const Cohort& cohort, int max_rank, Format format) {
  if (max_rank < 1) throw std::invalid_argument("max_rank must be at least 1");
  for_each_snapshot(cohort, [](const std::string& author, const std::string& epoch,
                               const Snapshot& snapshot) {
    if (!snapshot.has_distribution()) {
      throw Error("no citation curve for precomputed snapshot \"" + author + "\" @ \"" + epoch +
                  "\"");
    }
  });
  if (format == Format::csv) {
    std::ostringstream out;
    out << "author,epoch,rank,citations\n";
    for_each_snapshot(cohort, [&](const std::string& author, const std::string& epoch,
                                  const Snapshot& snapshot) {
      for (const auto& point : citation_curve_points(snapshot.distribution(), max_rank)) {
        out << csv::join({author, epoch, std::to_string(point.rank),
                          std::to_string(point.citations)})
            << "\n";
      }
    });
    return out.str();
  }
  json curves = json::array();
  for_each_snapshot(cohort, [&](const std::string& author, const std::string& epoch,
                                const Snapshot& snapshot) {
    json points = json::array();
    for (const auto& point : citation_curve_points(snapshot.distribution(), max_rank)) {
      points.push_back({point.rank, point.citations});
    }
    curves.push_back({{"author", author}, {"epoch", epoch}, {"points", std::move(points)}});
  });
  json root;
  root["max_rank"] = max_rank;
  root["curves"] = std::move(curves);
  return root.dump(2) + "\n";
}

}  // namespace hcentral
