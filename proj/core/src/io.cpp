#include "hcentral/io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "hcentral/csv.hpp"

namespace hcentral {
namespace {

using nlohmann::json;

constexpr std::string_view kRawHeader[] = {"author", "epoch", "citations"};

bool is_missing(const std::string& field) { return field.empty() || field == "-"; }

Count parse_count(const std::string& field, std::size_t line, const std::string& what) {
  Count value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || field.empty()) {
    throw ParseError(line, what + " must be an integer, got \"" + field + "\"");
  }
  if (value < 0) throw ParseError(line, what + " must be non-negative, got " + field);
  return value;
}

/// Index-table header: author, epoch, h, Np, Nc, A1..AR, I1..IR.
/// Returns R; throws when the shape does not match.
int parse_index_header(const std::vector<std::string>& fields) {
  static const std::vector<std::string> prefix = {"author", "epoch", "h", "Np", "Nc"};
  if (fields.size() < prefix.size() + 2 || (fields.size() - prefix.size()) % 2 != 0) {
    throw ParseError(1, "unrecognized header: expected author,epoch,citations or "
                        "author,epoch,h,Np,Nc,A1..,I1..");
  }
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (fields[i] != prefix[i]) {
      throw ParseError(1, "unrecognized header column \"" + fields[i] + "\" (expected \"" +
                              prefix[i] + "\")");
    }
  }
  const int radius_count = static_cast<int>((fields.size() - prefix.size()) / 2);
  for (int j = 1; j <= radius_count; ++j) {
    const auto& a = fields[prefix.size() + static_cast<std::size_t>(j) - 1];
    const auto& i = fields[prefix.size() + static_cast<std::size_t>(radius_count + j) - 1];
    if (a != "A" + std::to_string(j) || i != "I" + std::to_string(j)) {
      throw ParseError(1, "unrecognized header: radius columns must run A1..A" +
                              std::to_string(radius_count) + ",I1..I" +
                              std::to_string(radius_count));
    }
  }
  return radius_count;
}

void check_imported_series(Cohort& cohort, const std::string& author, const std::string& epoch,
                           const PrecomputedSnapshot& row, std::size_t line) {
  const auto monotone_warning = [&](const std::vector<std::optional<Count>>& values,
                                    const char* label) {
    for (std::size_t idx = 0; idx + 1 < values.size(); ++idx) {
      if (values[idx].has_value() && values[idx + 1].has_value() &&
          *values[idx + 1] < *values[idx]) {
        cohort.add_warning("line " + std::to_string(line) + ": " + author + " @ " + epoch + ": " +
                           label + " values decrease between radius " + std::to_string(idx + 1) +
                           " and " + std::to_string(idx + 2));
      }
    }
  };
  monotone_warning(row.area, "area");
  monotone_warning(row.interval, "interval");
  for (std::size_t idx = 0; idx < row.area.size() && idx < row.interval.size(); ++idx) {
    if (row.area[idx].has_value() && row.interval[idx].has_value() &&
        *row.area[idx] < *row.interval[idx]) {
      throw ParseError(line, "area below interval at radius " + std::to_string(idx + 1));
    }
  }
}

struct RawAccumulator {
  std::vector<std::string> epoch_order;
  std::vector<std::string> author_order;
  std::map<std::string, std::map<std::string, std::vector<Count>>> counts;

  void add(const std::string& author, const std::string& epoch, Count citations) {
    if (std::find(epoch_order.begin(), epoch_order.end(), epoch) == epoch_order.end()) {
      epoch_order.push_back(epoch);
    }
    counts[author][epoch].push_back(citations);
  }

  Cohort build() const {
    Cohort cohort;
    for (const auto& epoch : epoch_order) cohort.declare_epoch(epoch);
    for (const auto& [author, by_epoch] : counts) {
      for (const auto& [epoch, values] : by_epoch) {
        cohort.add_snapshot(author, epoch, Snapshot(CitationDistribution(values)));
      }
    }
    return cohort;
  }
};

Cohort read_raw_csv_rows(std::istream& in) {
  RawAccumulator acc;
  std::string line;
  std::size_t line_number = 1;  // header already consumed
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    const auto fields = csv::parse_line(line, line_number);
    if (fields.size() != 3) {
      throw ParseError(line_number,
                       "expected 3 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(line_number, "author must be non-empty");
    if (fields[1].empty()) throw ParseError(line_number, "epoch must be non-empty");
    acc.add(fields[0], fields[1], parse_count(fields[2], line_number, "citations"));
  }
  return acc.build();
}

Cohort read_index_csv_rows(std::istream& in, int radius_count) {
  Cohort cohort;
  std::string line;
  std::size_t line_number = 1;
  const std::size_t expected_fields = 5 + 2 * static_cast<std::size_t>(radius_count);
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    const auto fields = csv::parse_line(line, line_number);
    if (fields.size() != expected_fields) {
      throw ParseError(line_number, "expected " + std::to_string(expected_fields) +
                                        " fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(line_number, "author must be non-empty");
    if (fields[1].empty()) throw ParseError(line_number, "epoch must be non-empty");
    PrecomputedSnapshot row;
    row.h = static_cast<int>(parse_count(fields[2], line_number, "h"));
    row.cited_papers = parse_count(fields[3], line_number, "Np");
    row.total_citations = parse_count(fields[4], line_number, "Nc");
    const auto parse_cells = [&](std::size_t offset, const char* prefix) {
      std::vector<std::optional<Count>> cells;
      cells.reserve(static_cast<std::size_t>(radius_count));
      for (int j = 1; j <= radius_count; ++j) {
        const auto& field = fields[offset + static_cast<std::size_t>(j) - 1];
        if (is_missing(field)) {
          cells.emplace_back(std::nullopt);
        } else {
          cells.emplace_back(
              parse_count(field, line_number, std::string(prefix) + std::to_string(j)));
        }
      }
      return cells;
    };
    row.area = parse_cells(5, "A");
    row.interval = parse_cells(5 + static_cast<std::size_t>(radius_count), "I");
    check_imported_series(cohort, fields[0], fields[1], row, line_number);
    try {
      cohort.add_snapshot(fields[0], fields[1], Snapshot(std::move(row)));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_number, e.what());
    }
  }
  return cohort;
}

const json& require_member(const json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(1, std::string("missing \"") + key + "\" member");
  }
  return *it;
}

std::vector<std::optional<Count>> json_cells(const json& array, const char* what) {
  if (!array.is_array()) throw ParseError(1, std::string(what) + " must be an array");
  std::vector<std::optional<Count>> cells;
  cells.reserve(array.size());
  for (const auto& value : array) {
    if (value.is_null()) {
      cells.emplace_back(std::nullopt);
    } else if (value.is_number_integer()) {
      cells.emplace_back(value.get<Count>());
    } else {
      throw ParseError(1, std::string(what) + " entries must be integers or null");
    }
  }
  return cells;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw Error("unknown format \"" + name + "\" (expected csv or json)");
}

std::string to_string(Format format) { return format == Format::csv ? "csv" : "json"; }

Cohort read_cohort_csv(std::istream& in) {
  std::string header_line;
  if (!std::getline(in, header_line)) {
    throw ParseError(1, "empty input: header row required");
  }
  const auto header = csv::parse_line(header_line, 1);
  if (header.size() == 3 && header[0] == kRawHeader[0] && header[1] == kRawHeader[1] &&
      header[2] == kRawHeader[2]) {
    return read_raw_csv_rows(in);
  }
  const int radius_count = parse_index_header(header);
  return read_index_csv_rows(in, radius_count);
}

Cohort read_cohort_json(std::istream& in) {
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("invalid json: ") + e.what());
  }
  if (!root.is_object()) throw ParseError(1, "top level must be an object");

  Cohort cohort;
  if (const auto it = root.find("epochs"); it != root.end()) {
    if (!it->is_array()) throw ParseError(1, "\"epochs\" must be an array");
    for (const auto& epoch : *it) {
      if (!epoch.is_string()) throw ParseError(1, "\"epochs\" entries must be strings");
      cohort.declare_epoch(epoch.get<std::string>());
    }
  }
  const json& authors = require_member(root, "authors");
  if (!authors.is_array()) throw ParseError(1, "\"authors\" must be an array");
  for (const auto& entry : authors) {
    if (!entry.is_object()) throw ParseError(1, "author entries must be objects");
    const json& author_name = require_member(entry, "author");
    if (!author_name.is_string()) throw ParseError(1, "\"author\" must be a string");
    const std::string author = author_name.get<std::string>();
    const json& snapshots = require_member(entry, "snapshots");
    if (!snapshots.is_array()) throw ParseError(1, "\"snapshots\" must be an array");
    for (const auto& snap : snapshots) {
      if (!snap.is_object()) throw ParseError(1, "snapshot entries must be objects");
      const json& epoch_name = require_member(snap, "epoch");
      if (!epoch_name.is_string()) throw ParseError(1, "\"epoch\" must be a string");
      const std::string epoch = epoch_name.get<std::string>();
      try {
        if (const auto citations = snap.find("citations"); citations != snap.end()) {
          const auto cells = json_cells(*citations, "\"citations\"");
          std::vector<Count> counts;
          counts.reserve(cells.size());
          for (const auto& cell : cells) {
            if (!cell.has_value()) throw ParseError(1, "\"citations\" entries must be integers");
            counts.push_back(*cell);
          }
          cohort.add_snapshot(author, epoch, Snapshot(CitationDistribution(std::move(counts))));
        } else {
          PrecomputedSnapshot row;
          const json& h = require_member(snap, "h");
          if (!h.is_number_integer()) throw ParseError(1, "\"h\" must be an integer");
          row.h = h.get<int>();
          const json& papers = require_member(snap, "cited_papers");
          if (!papers.is_number_integer()) {
            throw ParseError(1, "\"cited_papers\" must be an integer");
          }
          row.cited_papers = papers.get<Count>();
          const json& total = require_member(snap, "total_citations");
          if (!total.is_number_integer()) {
            throw ParseError(1, "\"total_citations\" must be an integer");
          }
          row.total_citations = total.get<Count>();
          row.area = json_cells(require_member(snap, "area"), "\"area\"");
          row.interval = json_cells(require_member(snap, "interval"), "\"interval\"");
          check_imported_series(cohort, author, epoch, row, 1);
          cohort.add_snapshot(author, epoch, Snapshot(std::move(row)));
        }
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(1, e.what());
      }
    }
  }
  return cohort;
}

Cohort read_cohort(std::istream& in, Format format) {
  return format == Format::csv ? read_cohort_csv(in) : read_cohort_json(in);
}

Cohort read_cohort_file(const std::string& path, Format format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open \"" + path + "\" for reading");
  return read_cohort(in, format);
}

namespace {

struct OrderedRow {
  const std::string* epoch;
  const std::string* author;
  const Snapshot* snapshot;
};

/// Epoch-major in declared order; authors lexicographic inside an epoch.
std::vector<OrderedRow> ordered_rows(const Cohort& cohort) {
  std::vector<OrderedRow> rows;
  for (const auto& epoch : cohort.epochs()) {
    for (const auto& [author, snapshots] : cohort.authors()) {
      const auto it = snapshots.find(epoch);
      if (it != snapshots.end()) rows.push_back({&epoch, &author, &it->second});
    }
  }
  return rows;
}

void require_raw(const Cohort& cohort) {
  for (const auto& [author, snapshots] : cohort.authors()) {
    for (const auto& [epoch, snapshot] : snapshots) {
      if (!snapshot.has_distribution()) {
        throw Error("raw layout requires raw citations, but \"" + author + "\" @ \"" + epoch +
                    "\" is precomputed");
      }
    }
  }
}

}  // namespace

void write_cohort_csv(std::ostream& out, const Cohort& cohort, CohortLayout layout,
                      int max_radius) {
  if (layout == CohortLayout::raw_citations) {
    require_raw(cohort);
    out << "author,epoch,citations\n";
    for (const auto& row : ordered_rows(cohort)) {
      for (const Count c : row.snapshot->distribution().counts()) {
        out << csv::join({*row.author, *row.epoch, std::to_string(c)}) << "\n";
      }
    }
    return;
  }
  if (max_radius < 1) throw std::invalid_argument("max_radius must be at least 1");
  std::vector<std::string> header = {"author", "epoch", "h", "Np", "Nc"};
  for (int j = 1; j <= max_radius; ++j) header.push_back("A" + std::to_string(j));
  for (int j = 1; j <= max_radius; ++j) header.push_back("I" + std::to_string(j));
  out << csv::join(header) << "\n";
  for (const auto& row : ordered_rows(cohort)) {
    std::vector<std::string> fields = {*row.author, *row.epoch, std::to_string(row.snapshot->h()),
                                       std::to_string(row.snapshot->cited_papers()),
                                       std::to_string(row.snapshot->total_citations())};
    const auto push_cells = [&](auto getter) {
      for (int j = 1; j <= max_radius; ++j) {
        const auto value = getter(j);
        fields.push_back(value.has_value() ? std::to_string(*value) : "-");
      }
    };
    push_cells([&](int j) { return row.snapshot->area(j); });
    push_cells([&](int j) { return row.snapshot->interval(j); });
    out << csv::join(fields) << "\n";
  }
}

void write_cohort_json(std::ostream& out, const Cohort& cohort, CohortLayout layout,
                       int max_radius) {
  if (layout == CohortLayout::raw_citations) {
    require_raw(cohort);
  } else if (max_radius < 1) {
    throw std::invalid_argument("max_radius must be at least 1");
  }

  json root;
  root["epochs"] = cohort.epochs();
  json authors = json::array();
  for (const auto& [author, snapshots] : cohort.authors()) {
    json entry;
    entry["author"] = author;
    json snaps = json::array();
    for (const auto& epoch : cohort.epochs()) {
      const auto it = snapshots.find(epoch);
      if (it == snapshots.end()) continue;
      const Snapshot& snapshot = it->second;
      json snap;
      snap["epoch"] = epoch;
      if (layout == CohortLayout::raw_citations) {
        snap["citations"] = snapshot.distribution().counts();
      } else {
        snap["h"] = snapshot.h();
        snap["cited_papers"] = snapshot.cited_papers();
        snap["total_citations"] = snapshot.total_citations();
        const auto cells = [&](auto getter) {
          json values = json::array();
          for (int j = 1; j <= max_radius; ++j) {
            const auto value = getter(j);
            if (value.has_value()) {
              values.push_back(*value);
            } else {
              values.push_back(nullptr);
            }
          }
          return values;
        };
        snap["area"] = cells([&](int j) { return snapshot.area(j); });
        snap["interval"] = cells([&](int j) { return snapshot.interval(j); });
      }
      snaps.push_back(std::move(snap));
    }
    entry["snapshots"] = std::move(snaps);
    authors.push_back(std::move(entry));
  }
  root["authors"] = std::move(authors);
  out << root.dump(2) << "\n";
}

std::string serialize_cohort(const Cohort& cohort, Format format, CohortLayout layout,
                             int max_radius) {
  std::ostringstream out;
  if (format == Format::csv) {
    write_cohort_csv(out, cohort, layout, max_radius);
  } else {
    write_cohort_json(out, cohort, layout, max_radius);
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("failed reading \"" + path + "\"");
  return buffer.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open \"" + temp.string() + "\" for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code cleanup;
      std::filesystem::remove(temp, cleanup);
      throw Error("failed writing \"" + temp.string() + "\"");
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::error_code cleanup;
    std::filesystem::remove(temp, cleanup);
    throw Error("cannot move \"" + temp.string() + "\" over \"" + path + "\": " + ec.message());
  }
}

}  // namespace hcentral
