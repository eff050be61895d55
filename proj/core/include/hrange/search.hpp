#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hrange/polynomial.hpp"

namespace hrange::search {

// Inclusive integer interval for one coefficient axis.
struct Box {
  i64 lo = 0, hi = 0;
  i64 size() const { return hi - lo + 1; }
  bool operator==(const Box&) const = default;
};

struct Limits {
  i64 max_entries = CoverLimits{}.max_entries;
  std::optional<double> wall_clock_seconds;
  bool operator==(const Limits&) const = default;
};

// A coefficient-box sweep request: family, residue, the t's to sweep, six
// intervals for c21..c43, and an optional seed champion.
struct SearchSpec {
  Family family = Family::hofmeister();
  int r = 0;
  std::vector<i64> t_values;  // strictly increasing
  std::array<Box, 6> boxes{};
  std::optional<CVector> seed_champion;
  Limits limits;

  i64 box_candidates() const {
    i64 n = 1;
    for (const Box& b : boxes) n *= b.size();
    return n;
  }
};

void validate_spec(const SearchSpec& spec);

// Small MRU set of values candidates must be able to represent. Only targets
// at or below the current champion cover may reject (a first gap equal to
// champion+1 would also reject equal-cover candidates and lose ties).
class TargetCache {
 public:
  explicit TargetCache(std::size_t capacity = 8) : capacity_(capacity) {}

  void add(i64 target);
  const std::vector<i64>& targets() const { return targets_; }  // most recent first
  std::size_t capacity() const { return capacity_; }

 private:
  std::size_t capacity_;
  std::vector<i64> targets_;
};

enum class OutcomeKind { RejectedNonMonotone, RejectedAdmissibility, RejectedTarget, Evaluated };

struct Outcome {
  OutcomeKind kind = OutcomeKind::Evaluated;
  // RejectedAdmissibility: failing level and that prefix's cover, which is
  // also the candidate's exact cover.
  PrefixLevel prefix = PrefixLevel::A2;
  i64 prefix_cover = 0;
  // RejectedTarget: the unrepresentable target.
  i64 target = 0;
  // Evaluated.
  CoverResult result;
};

// Memo for prefix covers shared across candidates of one sweep; keys are a2
// and (a2, a3).
class PrefixCoverCache {
 public:
  i64 cover2(i64 a2, i64 h, const CoverLimits& limits);
  i64 cover3(i64 a2, i64 a3, i64 h, const CoverLimits& limits);

 private:
  std::unordered_map<i64, i64> n2_;
  struct PairHash {
    std::size_t operator()(const std::pair<i64, i64>& p) const {
      return std::hash<i64>()(p.first * 0x9e3779b97f4a7c15LL ^ p.second);
    }
  };
  std::unordered_map<std::pair<i64, i64>, i64, PairHash> n3_;
};

// Instantiates and checks, in order: monotonicity, prefix admissibility,
// every cached target at or below champion_cover (via can_represent), and
// only then runs cover_fast. Overflow and MemoryCap propagate.
Outcome evaluate_candidate(const ParametricBasis& pb, i64 t, i64 champion_cover,
                           const TargetCache& cache, const CoverLimits& limits = {},
                           PrefixCoverCache* prefix_cache = nullptr);

struct Counts {
  i64 enumerated = 0;
  i64 rejected_nonmonotone = 0;
  i64 rejected_admissibility = 0;
  i64 rejected_target = 0;
  i64 evaluated = 0;
  i64 errored = 0;

  bool conserved() const {
    return enumerated == rejected_nonmonotone + rejected_admissibility + rejected_target +
                             evaluated + errored;
  }
  bool operator==(const Counts&) const = default;
};

struct PerTResult {
  i64 t = 0;
  bool has_champion = false;
  CVector champion;
  i64 champion_cover = 0;
  i64 champion_first_gap = 0;
  std::vector<CVector> ties;  // equal-cover vectors other than the champion, lex order
  Counts counts;
  std::vector<std::string> errors;  // per-candidate error messages, enumeration order

  bool operator==(const PerTResult&) const = default;
};

struct SearchReport {
  std::vector<PerTResult> per_t;
  bool operator==(const SearchReport&) const;
};

// Resumable state: everything needed to continue after a completed epoch
// (one outermost-coefficient slice).
struct SearchState {
  std::uint64_t spec_digest = 0;
  bool pruning = true;
  std::size_t t_index = 0;       // t currently being swept
  i64 next_epoch = 0;            // index into the c21 axis
  std::vector<PerTResult> completed;
  // In-progress state for t_values[t_index]:
  bool has_best = false;
  i64 best_cover = 0;
  i64 best_first_gap = 0;
  std::vector<CVector> pool;  // vectors with exact cover == best_cover
  std::vector<i64> targets;   // most recent first
  Counts counts;
  std::vector<std::string> errors;
};

struct SearchOptions {
  bool pruning = true;
  int threads = 1;  // candidate-evaluation workers per epoch
  std::optional<i64> epoch_limit;  // stop after this many epochs (checkpoint/budget hook)
  std::function<void(const PerTResult&)> progress;  // called when a champion improves
  std::function<void(const SearchState&)> on_epoch_end;  // checkpoint hook
  // Per-candidate outcome replay in enumeration order, with the champion
  // cover the decision was made against. For small sweeps and tests.
  std::function<void(i64 t, const CVector&, const Outcome&, i64 champion_cover)> outcome_hook;
  std::optional<SearchState> resume;
};

// Raised when the epoch limit or wall-clock budget expires mid-sweep; carries
// the state reached so the sweep can resume.
class SweepInterruptedError : public std::runtime_error {
 public:
  SweepInterruptedError(const std::string& what, SearchState s)
      : std::runtime_error(what), state(std::move(s)) {}
  SearchState state;
};

// Stable digest of the effective spec (including the pruning switch); guards
// checkpoint resume.
std::uint64_t spec_digest(const SearchSpec& spec, bool pruning);

// Exhaustive sweep of the box for each t with deterministic outcomes:
// champion/target state advances only at epoch boundaries, ties are kept and
// broken lexicographically, and per-candidate errors are aggregated without
// aborting the sweep. Returns the report; throws only if the seed itself
// cannot be evaluated.
SearchReport search_family(const SearchSpec& spec, const SearchOptions& options = {});

}  // namespace hrange::search
