#include "hrange/search.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

namespace hrange::search {

void validate_spec(const SearchSpec& spec) {
  if (spec.r < 0 || spec.r > 11) throw std::invalid_argument("residue r must be in 0..11");
  for (const Box& b : spec.boxes)
    if (b.lo > b.hi) throw std::invalid_argument("coefficient interval is empty");
  for (std::size_t i = 0; i < spec.t_values.size(); ++i) {
    if (spec.t_values[i] < 1) throw std::invalid_argument("t values must be positive");
    if (i > 0 && spec.t_values[i] <= spec.t_values[i - 1])
      throw std::invalid_argument("t values must be strictly increasing");
  }
  if (spec.limits.max_entries < 2) throw std::invalid_argument("memory cap too small");
}

void TargetCache::add(i64 target) {
  if (target < 1) return;
  auto it = std::find(targets_.begin(), targets_.end(), target);
  if (it != targets_.end()) targets_.erase(it);
  targets_.insert(targets_.begin(), target);
  if (targets_.size() > capacity_) targets_.resize(capacity_);
}

i64 PrefixCoverCache::cover2(i64 a2, i64 h, const CoverLimits& limits) {
  auto it = n2_.find(a2);
  if (it != n2_.end()) return it->second;
  const i64 d[2] = {1, a2};
  const i64 n = cover_dp(d, h, limits).cover;
  n2_.emplace(a2, n);
  return n;
}

i64 PrefixCoverCache::cover3(i64 a2, i64 a3, i64 h, const CoverLimits& limits) {
  const std::pair<i64, i64> key{a2, a3};
  auto it = n3_.find(key);
  if (it != n3_.end()) return it->second;
  const i64 d[3] = {1, a2, a3};
  const i64 n = cover_dp(d, h, limits).cover;
  n3_.emplace(key, n);
  return n;
}

Outcome evaluate_candidate(const ParametricBasis& pb, i64 t, i64 champion_cover,
                           const TargetCache& cache, const CoverLimits& limits,
                           PrefixCoverCache* prefix_cache) {
  if (champion_cover < 0) throw std::invalid_argument("champion cover must be >= 0");

  Outcome out;
  const InstantiateResult inst = try_instantiate(pb, t);
  if (inst.status == InstantiateStatus::Overflow)
    throw OverflowError("candidate instantiation overflowed");
  if (inst.status == InstantiateStatus::NonMonotone) {
    out.kind = OutcomeKind::RejectedNonMonotone;
    return out;
  }
  const ConcreteBasis& b = inst.basis;

  // Prefix admissibility, cheapest check first.
  if (b.a2 > b.h + 1) {
    out.kind = OutcomeKind::RejectedAdmissibility;
    out.prefix = PrefixLevel::A2;
    out.prefix_cover = b.h;
    return out;
  }
  PrefixCoverCache local;
  PrefixCoverCache& pc = prefix_cache ? *prefix_cache : local;
  const i64 n2 = pc.cover2(b.a2, b.h, limits);
  if (b.a3 > n2 + 1) {
    out.kind = OutcomeKind::RejectedAdmissibility;
    out.prefix = PrefixLevel::A3;
    out.prefix_cover = n2;
    return out;
  }
  const i64 n3 = pc.cover3(b.a2, b.a3, b.h, limits);
  if (b.a4 > n3 + 1) {
    out.kind = OutcomeKind::RejectedAdmissibility;
    out.prefix = PrefixLevel::A4;
    out.prefix_cover = n3;
    return out;
  }

  // Difficult targets: only values at or below the champion cover may
  // reject, so equal-cover candidates always survive to evaluation.
  for (i64 target : cache.targets()) {
    if (target > champion_cover) continue;
    if (!can_represent(target, b)) {
      out.kind = OutcomeKind::RejectedTarget;
      out.target = target;
      return out;
    }
  }

  out.kind = OutcomeKind::Evaluated;
  out.result = cover_fast(b, limits);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Exact knowledge extracted from an outcome, if any.
struct KnownCover {
  bool known = false;
  i64 cover = 0;
  i64 first_gap = 0;
};

KnownCover known_cover(const Outcome& out) {
  switch (out.kind) {
    case OutcomeKind::Evaluated:
      return {true, out.result.cover, out.result.first_gap};
    case OutcomeKind::RejectedAdmissibility:
      // A denomination above prefix_cover+1 cannot fill the gap there, so
      // the candidate's cover equals the failing prefix's cover.
      return {true, out.prefix_cover, out.prefix_cover + 1};
    default:
      return {};
  }
}

struct ChunkResult {
  bool has_best = false;
  i64 best_cover = 0;
  i64 best_first_gap = 0;
  std::vector<CVector> pool;  // vectors whose exact cover == best_cover
  Counts counts;
  std::vector<i64> gaps;  // first gaps of fully evaluated candidates, in order
  std::vector<std::string> errors;
  std::vector<std::pair<CVector, Outcome>> outcomes;  // only when recording
};

void consider(ChunkResult& r, const CVector& c, const KnownCover& kc) {
  if (!kc.known) return;
  if (!r.has_best || kc.cover > r.best_cover) {
    r.has_best = true;
    r.best_cover = kc.cover;
    r.best_first_gap = kc.first_gap;
    r.pool.clear();
    r.pool.push_back(c);
  } else if (kc.cover == r.best_cover) {
    r.pool.push_back(c);
  }
}

// The inner five coefficient axes (c31..c43) flattened, c43 fastest.
struct InnerSpace {
  std::array<Box, 5> boxes;
  i64 total = 1;

  explicit InnerSpace(const std::array<Box, 6>& b) {
    for (int i = 0; i < 5; ++i) boxes[i] = b[i + 1];
    for (const Box& bx : boxes) total *= bx.size();
  }

  CVector at(i64 c21, i64 idx) const {
    std::array<i64, 5> v{};
    for (int i = 4; i >= 0; --i) {
      const i64 n = boxes[i].size();
      v[i] = boxes[i].lo + idx % n;
      idx /= n;
    }
    return CVector{c21, v[0], v[1], v[2], v[3], v[4]};
  }
};

struct Snapshot {
  i64 champion_cover = 0;
  TargetCache targets;
};

ChunkResult run_chunk(const SearchSpec& spec, i64 t, i64 c21, const InnerSpace& inner, i64 lo,
                      i64 hi, const Snapshot& snap, bool pruning, bool record) {
  ChunkResult r;
  PrefixCoverCache prefix_cache;
  const CoverLimits limits{spec.limits.max_entries};

  for (i64 idx = lo; idx < hi; ++idx) {
    const CVector c = inner.at(c21, idx);
    const ParametricBasis pb{spec.family, c, spec.r};
    ++r.counts.enumerated;
    try {
      Outcome out;
      if (pruning) {
        out = evaluate_candidate(pb, t, snap.champion_cover, snap.targets, limits, &prefix_cache);
      } else {
        // Pruning disabled: full oracle evaluation of every monotone basis.
        const InstantiateResult inst = try_instantiate(pb, t);
        if (inst.status == InstantiateStatus::Overflow)
          throw OverflowError("candidate instantiation overflowed");
        if (inst.status == InstantiateStatus::NonMonotone) {
          out.kind = OutcomeKind::RejectedNonMonotone;
        } else {
          out.kind = OutcomeKind::Evaluated;
          out.result = cover_naive(inst.basis, limits);
        }
      }
      switch (out.kind) {
        case OutcomeKind::RejectedNonMonotone: ++r.counts.rejected_nonmonotone; break;
        case OutcomeKind::RejectedAdmissibility: ++r.counts.rejected_admissibility; break;
        case OutcomeKind::RejectedTarget: ++r.counts.rejected_target; break;
        case OutcomeKind::Evaluated:
          ++r.counts.evaluated;
          r.gaps.push_back(out.result.first_gap);
          break;
      }
      consider(r, c, known_cover(out));
      if (record) r.outcomes.emplace_back(c, out);
    } catch (const std::exception& e) {
      ++r.counts.errored;
      std::string msg = "c=(";
      const auto arr = c.as_array();
      for (int i = 0; i < 6; ++i) msg += (i ? "," : "") + std::to_string(arr[i]);
      msg += "): ";
      msg += e.what();
      r.errors.push_back(std::move(msg));
    }
  }
  return r;
}

struct TState {
  bool has_best = false;
  i64 best_cover = 0;
  i64 best_first_gap = 0;
  std::vector<CVector> pool;
  TargetCache targets;
  Counts counts;
  std::vector<std::string> errors;
};

PerTResult finalize_t(i64 t, const TState& st) {
  PerTResult res;
  res.t = t;
  res.counts = st.counts;
  res.errors = st.errors;
  if (st.has_best) {
    std::vector<CVector> pool = st.pool;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    res.has_champion = true;
    res.champion = pool.front();
    res.champion_cover = st.best_cover;
    res.champion_first_gap = st.best_first_gap;
    res.ties.assign(pool.begin() + 1, pool.end());
  }
  return res;
}

}  // namespace

bool SearchReport::operator==(const SearchReport& o) const { return per_t == o.per_t; }

SearchReport search_family(const SearchSpec& spec, const SearchOptions& options) {
  validate_spec(spec);
  const std::uint64_t digest = spec_digest(spec, options.pruning);

  std::size_t t_index = 0;
  i64 next_epoch = 0;
  std::vector<PerTResult> completed;
  TState st;

  if (options.resume) {
    const SearchState& rs = *options.resume;
    if (rs.spec_digest != digest || rs.pruning != options.pruning)
      throw CorruptCheckpointError("checkpoint does not match this search spec");
    t_index = rs.t_index;
    next_epoch = rs.next_epoch;
    completed = rs.completed;
    st.has_best = rs.has_best;
    st.best_cover = rs.best_cover;
    st.best_first_gap = rs.best_first_gap;
    st.pool = rs.pool;
    for (auto it = rs.targets.rbegin(); it != rs.targets.rend(); ++it) st.targets.add(*it);
    st.counts = rs.counts;
    st.errors = rs.errors;
  }

  const i64 n21 = spec.boxes[0].size();
  const InnerSpace inner(spec.boxes);
  const int threads = std::max(1, options.threads);
  const auto start = Clock::now();
  i64 epochs_done = 0;

  auto make_state = [&]() {
    SearchState s;
    s.spec_digest = digest;
    s.pruning = options.pruning;
    s.t_index = t_index;
    s.next_epoch = next_epoch;
    s.completed = completed;
    s.has_best = st.has_best;
    s.best_cover = st.best_cover;
    s.best_first_gap = st.best_first_gap;
    s.pool = st.pool;
    s.targets = st.targets.targets();
    s.counts = st.counts;
    s.errors = st.errors;
    return s;
  };

  while (t_index < spec.t_values.size()) {
    const i64 t = spec.t_values[t_index];

    if (next_epoch == 0) {
      st = TState();
      if (spec.seed_champion) {
        // The seed is evaluated up front; a failure here aborts the sweep.
        const ConcreteBasis sb = instantiate({spec.family, *spec.seed_champion, spec.r}, t);
        const CoverResult cr = cover_fast(sb, CoverLimits{spec.limits.max_entries});
        st.has_best = true;
        st.best_cover = cr.cover;
        st.best_first_gap = cr.first_gap;
        st.pool.push_back(*spec.seed_champion);
        st.targets.add(cr.first_gap);
        if (options.progress) options.progress(finalize_t(t, st));
      }
    }

    while (next_epoch < n21) {
      const i64 c21 = spec.boxes[0].lo + next_epoch;
      const Snapshot snap{st.has_best ? st.best_cover : 0, st.targets};
      const bool record = static_cast<bool>(options.outcome_hook);

      // Partition the inner box into contiguous chunks; merge in order.
      std::vector<ChunkResult> results;
      const i64 total = inner.total;
      const int nchunks = static_cast<int>(std::min<i64>(threads, std::max<i64>(total, 1)));
      if (nchunks <= 1) {
        results.push_back(
            run_chunk(spec, t, c21, inner, 0, total, snap, options.pruning, record));
      } else {
        std::vector<std::future<ChunkResult>> futs;
        const i64 step = (total + nchunks - 1) / nchunks;
        for (int w = 0; w < nchunks; ++w) {
          const i64 lo = w * step;
          const i64 hi = std::min<i64>(total, lo + step);
          if (lo >= hi) break;
          futs.push_back(std::async(std::launch::async, [&, lo, hi] {
            return run_chunk(spec, t, c21, inner, lo, hi, snap, options.pruning, record);
          }));
        }
        for (auto& f : futs) results.push_back(f.get());
      }

      const i64 prev_best = st.has_best ? st.best_cover : -1;
      for (ChunkResult& r : results) {
        st.counts.enumerated += r.counts.enumerated;
        st.counts.rejected_nonmonotone += r.counts.rejected_nonmonotone;
        st.counts.rejected_admissibility += r.counts.rejected_admissibility;
        st.counts.rejected_target += r.counts.rejected_target;
        st.counts.evaluated += r.counts.evaluated;
        st.counts.errored += r.counts.errored;
        for (auto& e : r.errors) st.errors.push_back(std::move(e));
        if (options.outcome_hook)
          for (auto& [c, out] : r.outcomes) options.outcome_hook(t, c, out, snap.champion_cover);
        if (r.has_best) {
          if (!st.has_best || r.best_cover > st.best_cover) {
            st.has_best = true;
            st.best_cover = r.best_cover;
            st.best_first_gap = r.best_first_gap;
            st.pool = std::move(r.pool);
          } else if (r.best_cover == st.best_cover) {
            st.pool.insert(st.pool.end(), r.pool.begin(), r.pool.end());
          }
        }
        // Gaps seen during full evaluations feed the difficult-target cache.
        for (i64 g : r.gaps) st.targets.add(g);
      }
      if (st.has_best && st.best_cover > prev_best) {
        st.targets.add(st.best_first_gap);  // champion's first gap stays cached
        if (options.progress) options.progress(finalize_t(t, st));
      }

      ++next_epoch;
      ++epochs_done;
      if (options.on_epoch_end) options.on_epoch_end(make_state());

      const bool out_of_epochs = options.epoch_limit && epochs_done >= *options.epoch_limit;
      const bool out_of_time =
          spec.limits.wall_clock_seconds &&
          std::chrono::duration<double>(Clock::now() - start).count() >
              *spec.limits.wall_clock_seconds;
      if ((out_of_epochs || out_of_time) && !(t_index + 1 == spec.t_values.size() && next_epoch == n21))
        throw SweepInterruptedError(out_of_time ? "wall-clock budget exhausted"
                                                : "epoch limit reached",
                                    make_state());
    }

    completed.push_back(finalize_t(t, st));
    ++t_index;
    next_epoch = 0;
  }

  return SearchReport{std::move(completed)};
}

}  // namespace hrange::search
