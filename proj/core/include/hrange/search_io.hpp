#pragma once

#include <iosfwd>
#include <string>

#include "hrange/search.hpp"

namespace hrange::search {

// SearchSpec document: a single JSON object with fields
//   family ("hofmeister"|"braunschaedel"), r, t_values, boxes (six [lo,hi]
//   pairs), seed (optional six-array), limits {max_entries, wall_clock_seconds}.
SearchSpec parse_spec(const std::string& json_text);
SearchSpec load_spec(const std::string& path);
std::string serialize_spec(const SearchSpec& spec);

// Checkpoint file: line-delimited; a header line carrying the spec digest,
// then one line of resumable state.
void write_checkpoint(const std::string& path, const SearchState& state);
SearchState read_checkpoint(const std::string& path);

// Tab-separated report, one row per t:
//   t  cover  c21..c43  first_gap  ties  enumerated  nonmonotone
//   admissibility  target  evaluated  errored
// 'ties' is a semicolon-joined list of comma-joined c-vectors (may be empty).
void write_report_tsv(std::ostream& os, const SearchReport& report);

// One progress row: t, cover, c21..c43.
std::string progress_row(const PerTResult& r);

}  // namespace hrange::search
