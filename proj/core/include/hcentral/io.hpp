#pragma once

#include <iosfwd>
#include <string>

#include "hcentral/cohort.hpp"
#include "hcentral/types.hpp"

namespace hcentral {

enum class Format { csv, json };

Format parse_format(const std::string& name);
std::string to_string(Format format);

/// How a cohort is laid out on disk.
///  raw_citations: one row/object per paper, fields author, epoch, citations.
///  index_table:   one row/object per (author, epoch) carrying h, cited
///                 paper and total citation counts, and the central area and
///                 interval values per radius (missing cells stay missing).
enum class CohortLayout { raw_citations, index_table };

/// CSV ingestion. The layout is detected from the header row: a raw table
/// starts "author,epoch,citations", an index table "author,epoch,h,...".
/// Throws ParseError with 1-based line numbers (header is line 1).
Cohort read_cohort_csv(std::istream& in);

/// JSON ingestion; each snapshot object either carries "citations" (raw) or
/// the index fields. Throws ParseError (line numbers from the JSON parser
/// are approximate for structural errors).
Cohort read_cohort_json(std::istream& in);

Cohort read_cohort(std::istream& in, Format format);
Cohort read_cohort_file(const std::string& path, Format format);

/// Raw layout writers require every snapshot to be distribution-backed
/// (throw Error otherwise). Output is deterministic: epochs in declared
/// order drive row grouping for index tables (epoch-major), authors sort
/// lexicographically, citations print in canonical non-increasing order.
/// Snapshots with zero papers produce no raw rows and are lost on re-read.
void write_cohort_csv(std::ostream& out, const Cohort& cohort, CohortLayout layout,
                      int max_radius = 10);
void write_cohort_json(std::ostream& out, const Cohort& cohort, CohortLayout layout,
                       int max_radius = 10);

std::string serialize_cohort(const Cohort& cohort, Format format, CohortLayout layout,
                             int max_radius = 10);

/// Whole-file read; throws Error on IO failure.
std::string read_file(const std::string& path);

/// Writes via a sibling temp file and renames over the target, so readers
/// never observe a partial file. Throws Error on IO failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace hcentral
