#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hrange/search.hpp"
#include "hrange/search_io.hpp"

using namespace hrange;
using namespace hrange::search;

namespace {

SearchSpec small_spec(i64 t = 2, int r = 0, i64 width = 1) {
  SearchSpec spec;
  spec.family = Family::hofmeister();
  spec.r = r;
  spec.t_values = {t};
  const std::array<i64, 6> center{1, 0, 0, 0, 0, 0};
  for (int i = 0; i < 6; ++i) spec.boxes[i] = Box{center[i] - width, center[i] + width};
  return spec;
}

std::string report_text(const SearchReport& rep) {
  std::ostringstream os;
  write_report_tsv(os, rep);
  return os.str();
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("target cache keeps most recent first, deduplicated, capped") {
  TargetCache cache(3);
  cache.add(10);
  cache.add(20);
  cache.add(30);
  CHECK(cache.targets() == std::vector<i64>{30, 20, 10});
  cache.add(20);  // refresh moves to front
  CHECK(cache.targets() == std::vector<i64>{20, 30, 10});
  cache.add(40);  // evicts the oldest
  CHECK(cache.targets() == std::vector<i64>{40, 20, 30});
  cache.add(0);  // non-positive values are ignored
  CHECK(cache.targets().size() == 3);
}

TEST_CASE("evaluate_candidate evaluates the worked basis") {
  const ParametricBasis pb{Family::braunschaedel(), {2, 2, -1, 3, -1, 0}, 0};
  const Outcome out = evaluate_candidate(pb, 20, 0, TargetCache{});
  CHECK(out.kind == OutcomeKind::Evaluated);
  CHECK(out.result.cover == 28491279);
}

TEST_CASE("evaluate_candidate rejects non-monotone instantiations") {
  const ParametricBasis pb{Family::hofmeister(), {0, 0, -3, 0, 0, 0}, 0};
  const Outcome out = evaluate_candidate(pb, 1, 0, TargetCache{});
  CHECK(out.kind == OutcomeKind::RejectedNonMonotone);
}

TEST_CASE("evaluate_candidate rejects on a cached difficult target") {
  // 28491280 is the first gap of this candidate, and at or below the
  // hypothetical champion cover, so it rejects.
  const ParametricBasis pb{Family::braunschaedel(), {2, 2, -1, 3, -1, 0}, 0};
  TargetCache cache;
  cache.add(28491280);
  const Outcome out = evaluate_candidate(pb, 20, 28491280, cache);
  CHECK(out.kind == OutcomeKind::RejectedTarget);
  CHECK(out.target == 28491280);

  // The same target above the champion cover must not reject.
  const Outcome kept = evaluate_candidate(pb, 20, 28491279, cache);
  CHECK(kept.kind == OutcomeKind::Evaluated);
}

TEST_CASE("evaluate_candidate rejects inadmissible prefixes with their exact cover") {
  // a2 = 9 + 30 = 39 > h + 1 = 13 at t=1.
  const ParametricBasis pb{Family::hofmeister(), {30, 40, 0, 100, 0, 0}, 0};
  const Outcome out = evaluate_candidate(pb, 1, 0, TargetCache{});
  CHECK(out.kind == OutcomeKind::RejectedAdmissibility);
  CHECK(out.prefix == PrefixLevel::A2);
  CHECK(out.prefix_cover == 12);
  CHECK(cover_naive(instantiate(pb, 1)).cover == 12);
}

TEST_CASE("evaluate_candidate validates the champion cover") {
  const ParametricBasis pb{Family::hofmeister(), {}, 0};
  CHECK_THROWS_AS(evaluate_candidate(pb, 1, -1, TargetCache{}), std::invalid_argument);
}

TEST_CASE("search results are independent of the worker count") {
  const SearchSpec spec = small_spec();
  SearchOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const SearchReport a = search_family(spec, one);
  const SearchReport b = search_family(spec, four);
  CHECK(a == b);
  CHECK(report_text(a) == report_text(b));
}

TEST_CASE("pruning does not change the champion or the tie set") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<i64> off(-2, 2);
  for (int iter = 0; iter < 4; ++iter) {
    SearchSpec spec;
    spec.family = iter % 2 ? Family::hofmeister() : Family::braunschaedel();
    spec.r = iter;
    spec.t_values = {2};
    const std::array<i64, 6> base{1, 0, 0, 0, 0, 0};
    for (int i = 0; i < 6; ++i) {
      const i64 lo = base[i] + off(rng);
      spec.boxes[i] = Box{lo, lo + 1};
    }
    SearchOptions pruned, exhaustive;
    exhaustive.pruning = false;
    const SearchReport a = search_family(spec, pruned);
    const SearchReport b = search_family(spec, exhaustive);
    REQUIRE(a.per_t.size() == b.per_t.size());
    for (std::size_t i = 0; i < a.per_t.size(); ++i) {
      CAPTURE(iter);
      CHECK(a.per_t[i].has_champion == b.per_t[i].has_champion);
      CHECK(a.per_t[i].champion == b.per_t[i].champion);
      CHECK(a.per_t[i].champion_cover == b.per_t[i].champion_cover);
      CHECK(a.per_t[i].ties == b.per_t[i].ties);
    }
  }
}

TEST_CASE("counts are conserved") {
  const SearchReport rep = search_family(small_spec(3, 5, 1));
  for (const PerTResult& r : rep.per_t) {
    CHECK(r.counts.conserved());
    CHECK(r.counts.enumerated == 729);
  }
}

TEST_CASE("rejections are sound at decision time") {
  SearchSpec spec = small_spec(2, 0, 1);
  spec.seed_champion = CVector{1, 0, 0, 0, 0, 0};
  SearchOptions opt;
  int target_rejections = 0;
  opt.outcome_hook = [&](i64 t, const CVector& c, const Outcome& out, i64 champion_cover) {
    const ParametricBasis pb{spec.family, c, spec.r};
    if (out.kind == OutcomeKind::RejectedTarget) {
      ++target_rejections;
      CHECK(cover_naive(instantiate(pb, t)).cover < champion_cover);
    } else if (out.kind == OutcomeKind::RejectedAdmissibility) {
      CHECK(cover_naive(instantiate(pb, t)).cover == out.prefix_cover);
    }
  };
  search_family(spec, opt);
  CHECK(target_rejections >= 0);
}

TEST_CASE("seeded champion is a floor for the result") {
  SearchSpec spec = small_spec();
  spec.seed_champion = CVector{1, 0, 0, 0, 0, 0};
  const ConcreteBasis seed = instantiate({spec.family, *spec.seed_champion, spec.r}, 2);
  const i64 seed_cover = cover_naive(seed).cover;
  const SearchReport rep = search_family(spec);
  CHECK(rep.per_t[0].champion_cover >= seed_cover);
}

TEST_CASE("empty t list gives an empty report") {
  SearchSpec spec = small_spec();
  spec.t_values.clear();
  CHECK(search_family(spec).per_t.empty());
}

TEST_CASE("progress rows fire when the champion improves") {
  std::vector<std::string> rows;
  SearchOptions opt;
  opt.progress = [&](const PerTResult& r) { rows.push_back(progress_row(r)); };
  search_family(small_spec(), opt);
  CHECK(!rows.empty());
  // Rows are tab-separated: t, cover, then six coefficients.
  CHECK(std::count(rows.back().begin(), rows.back().end(), '\t') == 7);
}

TEST_CASE("spec JSON round-trips") {
  SearchSpec spec = small_spec(4, 7, 2);
  spec.seed_champion = CVector{1, -1, 0, 2, 0, 0};
  spec.limits.max_entries = 1'000'000;
  spec.limits.wall_clock_seconds = 5.0;
  const SearchSpec back = parse_spec(serialize_spec(spec));
  CHECK(back.family == spec.family);
  CHECK(back.r == spec.r);
  CHECK(back.t_values == spec.t_values);
  CHECK(back.boxes == spec.boxes);
  CHECK(back.seed_champion == spec.seed_champion);
  CHECK(back.limits == spec.limits);
  CHECK(spec_digest(back, true) == spec_digest(spec, true));
  CHECK(spec_digest(back, true) != spec_digest(spec, false));
}

TEST_CASE("malformed spec JSON is rejected") {
  CHECK_THROWS_AS(parse_spec("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(R"({"family":"hofmeister","r":12,"t_values":[1],
      "boxes":[[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})"),
                  std::invalid_argument);
}

TEST_CASE("checkpoint round-trips and resumes to an identical report") {
  const SearchSpec spec = small_spec(2, 0, 1);  // three epochs (c21 in 0..2)
  const SearchReport straight = search_family(spec);

  // Interrupt after one epoch, checkpoint, resume.
  const std::string path = temp_path("hrange_ck_test.jsonl");
  SearchOptions first;
  first.epoch_limit = 1;
  SearchState state;
  try {
    search_family(spec, first);
    FAIL("expected interruption");
  } catch (const SweepInterruptedError& e) {
    state = e.state;
  }
  write_checkpoint(path, state);
  const SearchState loaded = read_checkpoint(path);

  SearchOptions rest;
  rest.resume = loaded;
  const SearchReport resumed = search_family(spec, rest);
  CHECK(resumed == straight);
  std::remove(path.c_str());
}

TEST_CASE("resume with a mismatched spec digest is rejected") {
  const SearchSpec spec = small_spec(2, 0, 1);
  SearchOptions first;
  first.epoch_limit = 1;
  SearchState state;
  try {
    search_family(spec, first);
  } catch (const SweepInterruptedError& e) {
    state = e.state;
  }

  SearchSpec other = spec;
  other.r = 3;
  SearchOptions rest;
  rest.resume = state;
  CHECK_THROWS_AS(search_family(other, rest), CorruptCheckpointError);

  // Pruning is part of the effective spec.
  SearchOptions unpruned;
  unpruned.resume = state;
  unpruned.pruning = false;
  CHECK_THROWS_AS(search_family(spec, unpruned), CorruptCheckpointError);
}

TEST_CASE("tampered checkpoints are rejected") {
  const std::string path = temp_path("hrange_ck_tamper.jsonl");
  SearchState state;
  state.spec_digest = 0x1234;
  write_checkpoint(path, state);

  std::ifstream in(path);
  std::string header, body;
  std::getline(in, header);
  std::getline(in, body);
  in.close();

  {
    std::ofstream out(path, std::ios::trunc);
    out << header << '\n';  // body missing
  }
  CHECK_THROWS_AS(read_checkpoint(path), CorruptCheckpointError);

  {
    std::ofstream out(path, std::ios::trunc);
    out << "{\"magic\":\"something-else\",\"version\":1,\"digest\":\"00\"}\n" << body << '\n';
  }
  CHECK_THROWS_AS(read_checkpoint(path), CorruptCheckpointError);

  CHECK_THROWS_AS(read_checkpoint(temp_path("hrange_no_such_file.jsonl")),
                  CorruptCheckpointError);
  std::remove(path.c_str());
}

TEST_CASE("wall-clock budget interrupts between epochs") {
  SearchSpec spec = small_spec(2, 0, 1);
  spec.limits.wall_clock_seconds = 0.0;
  CHECK_THROWS_AS(search_family(spec), SweepInterruptedError);
}

TEST_CASE("multi-t sweeps keep per-t champions") {
  SearchSpec spec = small_spec(2, 0, 1);
  spec.t_values = {1, 2, 3};
  const SearchReport rep = search_family(spec);
  REQUIRE(rep.per_t.size() == 3);
  CHECK(rep.per_t[0].t == 1);
  CHECK(rep.per_t[2].t == 3);
  // Covers grow with t for this family.
  CHECK(rep.per_t[0].champion_cover < rep.per_t[1].champion_cover);
  CHECK(rep.per_t[1].champion_cover < rep.per_t[2].champion_cover);
}

TEST_CASE("spec validation rejects bad inputs") {
  SearchSpec spec = small_spec();
  spec.boxes[2] = Box{3, 1};
  CHECK_THROWS_AS(validate_spec(spec), std::invalid_argument);
  spec = small_spec();
  spec.t_values = {3, 3};
  CHECK_THROWS_AS(validate_spec(spec), std::invalid_argument);
  spec = small_spec();
  spec.r = 13;
  CHECK_THROWS_AS(validate_spec(spec), std::invalid_argument);
}
