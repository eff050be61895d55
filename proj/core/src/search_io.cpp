#include "hrange/search_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace hrange::search {

namespace {

using nlohmann::json;

json spec_to_json(const SearchSpec& spec) {
  json j;
  j["family"] = to_string(spec.family.name);
  if (spec.family.name == FamilyName::Custom) {
    const KVector& k = spec.family.k;
    j["k"] = {k.k21, k.k31, k.k32, k.k41, k.k42, k.k43};
  }
  j["r"] = spec.r;
  j["t_values"] = spec.t_values;
  json boxes = json::array();
  for (const Box& b : spec.boxes) boxes.push_back({b.lo, b.hi});
  j["boxes"] = boxes;
  if (spec.seed_champion) j["seed"] = spec.seed_champion->as_array();
  json limits;
  limits["max_entries"] = spec.limits.max_entries;
  if (spec.limits.wall_clock_seconds) limits["wall_clock_seconds"] = *spec.limits.wall_clock_seconds;
  j["limits"] = limits;
  return j;
}

SearchSpec spec_from_json(const json& j) {
  SearchSpec spec;
  const FamilyName name = family_from_string(j.at("family").get<std::string>());
  if (name == FamilyName::Hofmeister) {
    spec.family = Family::hofmeister();
  } else if (name == FamilyName::Braunschaedel) {
    spec.family = Family::braunschaedel();
  } else {
    const auto k = j.at("k").get<std::array<i64, 6>>();
    spec.family = Family::custom({k[0], k[1], k[2], k[3], k[4], k[5]});
  }
  spec.r = j.at("r").get<int>();
  spec.t_values = j.at("t_values").get<std::vector<i64>>();
  const auto& boxes = j.at("boxes");
  if (!boxes.is_array() || boxes.size() != 6)
    throw std::invalid_argument("boxes must be an array of six [lo,hi] pairs");
  for (int i = 0; i < 6; ++i) {
    const auto& b = boxes[i];
    if (!b.is_array() || b.size() != 2) throw std::invalid_argument("bad box interval");
    spec.boxes[i] = Box{b[0].get<i64>(), b[1].get<i64>()};
  }
  if (j.contains("seed") && !j["seed"].is_null())
    spec.seed_champion = CVector::from_array(j["seed"].get<std::array<i64, 6>>());
  if (j.contains("limits")) {
    const auto& l = j["limits"];
    if (l.contains("max_entries")) spec.limits.max_entries = l["max_entries"].get<i64>();
    if (l.contains("wall_clock_seconds") && !l["wall_clock_seconds"].is_null())
      spec.limits.wall_clock_seconds = l["wall_clock_seconds"].get<double>();
  }
  validate_spec(spec);
  return spec;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

json cvec_json(const CVector& c) { return json(c.as_array()); }
CVector cvec_from(const json& j) { return CVector::from_array(j.get<std::array<i64, 6>>()); }

json counts_json(const Counts& c) {
  return json{{"enumerated", c.enumerated},
              {"nonmonotone", c.rejected_nonmonotone},
              {"admissibility", c.rejected_admissibility},
              {"target", c.rejected_target},
              {"evaluated", c.evaluated},
              {"errored", c.errored}};
}

Counts counts_from(const json& j) {
  Counts c;
  c.enumerated = j.at("enumerated").get<i64>();
  c.rejected_nonmonotone = j.at("nonmonotone").get<i64>();
  c.rejected_admissibility = j.at("admissibility").get<i64>();
  c.rejected_target = j.at("target").get<i64>();
  c.evaluated = j.at("evaluated").get<i64>();
  c.errored = j.at("errored").get<i64>();
  return c;
}

json result_json(const PerTResult& r) {
  json j;
  j["t"] = r.t;
  j["has_champion"] = r.has_champion;
  j["champion"] = cvec_json(r.champion);
  j["cover"] = r.champion_cover;
  j["first_gap"] = r.champion_first_gap;
  json ties = json::array();
  for (const CVector& c : r.ties) ties.push_back(cvec_json(c));
  j["ties"] = ties;
  j["counts"] = counts_json(r.counts);
  j["errors"] = r.errors;
  return j;
}

PerTResult result_from(const json& j) {
  PerTResult r;
  r.t = j.at("t").get<i64>();
  r.has_champion = j.at("has_champion").get<bool>();
  r.champion = cvec_from(j.at("champion"));
  r.champion_cover = j.at("cover").get<i64>();
  r.champion_first_gap = j.at("first_gap").get<i64>();
  for (const auto& c : j.at("ties")) r.ties.push_back(cvec_from(c));
  r.counts = counts_from(j.at("counts"));
  r.errors = j.at("errors").get<std::vector<std::string>>();
  return r;
}

void join_cvec(std::ostream& os, const CVector& c) {
  const auto a = c.as_array();
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << a[i];
}

}  // namespace

SearchSpec parse_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad spec JSON: ") + e.what());
  }
  try {
    return spec_from_json(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad spec JSON: ") + e.what());
  }
}

SearchSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string serialize_spec(const SearchSpec& spec) { return spec_to_json(spec).dump(); }

std::uint64_t spec_digest(const SearchSpec& spec, bool pruning) {
  json j = spec_to_json(spec);
  j.erase("limits");  // execution knobs do not change enumeration outcomes
  j["max_entries"] = spec.limits.max_entries;  // but the cap changes error outcomes
  j["pruning"] = pruning;
  return fnv1a(j.dump());
}

void write_checkpoint(const std::string& path, const SearchState& state) {
  json header;
  header["magic"] = "hrange-checkpoint";
  header["version"] = 1;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state.spec_digest));
  header["digest"] = buf;

  json body;
  body["pruning"] = state.pruning;
  body["t_index"] = state.t_index;
  body["next_epoch"] = state.next_epoch;
  json completed = json::array();
  for (const PerTResult& r : state.completed) completed.push_back(result_json(r));
  body["completed"] = completed;
  body["has_best"] = state.has_best;
  body["best_cover"] = state.best_cover;
  body["best_first_gap"] = state.best_first_gap;
  json pool = json::array();
  for (const CVector& c : state.pool) pool.push_back(cvec_json(c));
  body["pool"] = pool;
  body["targets"] = state.targets;
  body["counts"] = counts_json(state.counts);
  body["errors"] = state.errors;

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
    out << header.dump() << '\n' << body.dump() << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move checkpoint into place: " + path);
}

SearchState read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorruptCheckpointError("cannot open checkpoint: " + path);
  std::string header_line, body_line;
  if (!std::getline(in, header_line) || !std::getline(in, body_line))
    throw CorruptCheckpointError("checkpoint is truncated");

  try {
    const json header = json::parse(header_line);
    if (header.at("magic").get<std::string>() != "hrange-checkpoint" ||
        header.at("version").get<int>() != 1)
      throw CorruptCheckpointError("checkpoint version mismatch");

    SearchState state;
    state.spec_digest = std::stoull(header.at("digest").get<std::string>(), nullptr, 16);

    const json body = json::parse(body_line);
    state.pruning = body.at("pruning").get<bool>();
    state.t_index = body.at("t_index").get<std::size_t>();
    state.next_epoch = body.at("next_epoch").get<i64>();
    for (const auto& r : body.at("completed")) state.completed.push_back(result_from(r));
    state.has_best = body.at("has_best").get<bool>();
    state.best_cover = body.at("best_cover").get<i64>();
    state.best_first_gap = body.at("best_first_gap").get<i64>();
    for (const auto& c : body.at("pool")) state.pool.push_back(cvec_from(c));
    state.targets = body.at("targets").get<std::vector<i64>>();
    state.counts = counts_from(body.at("counts"));
    state.errors = body.at("errors").get<std::vector<std::string>>();
    return state;
  } catch (const json::exception& e) {
    throw CorruptCheckpointError(std::string("checkpoint is malformed: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw CorruptCheckpointError("checkpoint digest is malformed");
  }
}

void write_report_tsv(std::ostream& os, const SearchReport& report) {
  os << "# t\tcover\tc21\tc31\tc32\tc41\tc42\tc43\tfirst_gap\tties\t"
        "enumerated\tnonmonotone\tadmissibility\ttarget\tevaluated\terrored\n";
  for (const PerTResult& r : report.per_t) {
    os << r.t << '\t';
    if (r.has_champion) {
      os << r.champion_cover;
      const auto a = r.champion.as_array();
      for (i64 v : a) os << '\t' << v;
      os << '\t' << r.champion_first_gap << '\t';
      for (std::size_t i = 0; i < r.ties.size(); ++i) {
        if (i) os << ';';
        join_cvec(os, r.ties[i]);
      }
    } else {
      os << 0 << "\t-\t-\t-\t-\t-\t-\t" << 0 << '\t';
    }
    const Counts& c = r.counts;
    os << '\t' << c.enumerated << '\t' << c.rejected_nonmonotone << '\t'
       << c.rejected_admissibility << '\t' << c.rejected_target << '\t' << c.evaluated << '\t'
       << c.errored << '\n';
  }
}

std::string progress_row(const PerTResult& r) {
  std::ostringstream os;
  os << r.t << '\t' << r.champion_cover;
  for (i64 v : r.champion.as_array()) os << '\t' << v;
  return os.str();
}

}  // namespace hrange::search
