#include "commands.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hrange/analysis.hpp"
#include "hrange/search_io.hpp"
#include "verify_suite.hpp"

namespace hrange::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitOverflow = 2;
constexpr int kExitMemoryCap = 3;
constexpr int kExitCorruptCheckpoint = 4;
constexpr int kExitFixtureFailure = 5;

std::vector<i64> parse_i64_list(const std::string& text) {
  std::vector<i64> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const i64 v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

template <std::size_t N>
std::array<i64, N> parse_i64_array(const std::string& text) {
  const std::vector<i64> v = parse_i64_list(text);
  if (v.size() != N)
    throw std::invalid_argument("expected " + std::to_string(N) + " integers, got " + text);
  std::array<i64, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

CVector parse_cvector(const std::string& text) { return CVector::from_array(parse_i64_array<6>(text)); }

// "k51,k52,k53,k54:c51,c52,c53,c54", the tables' column order.
RegularForm parse_rf(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("regular form must be k51,k52,k53,k54:c51,c52,c53,c54");
  const auto k = parse_i64_array<4>(text.substr(0, colon));
  const auto c = parse_i64_array<4>(text.substr(colon + 1));
  return RegularForm{k[0], k[1], k[2], k[3], c[0], c[1], c[2], c[3]};
}

Family parse_family(const std::string& name) {
  const FamilyName fn = family_from_string(name);
  if (fn == FamilyName::Hofmeister) return Family::hofmeister();
  if (fn == FamilyName::Braunschaedel) return Family::braunschaedel();
  throw std::invalid_argument("custom families need explicit slopes; use a spec file");
}

std::string join_i64(const std::array<i64, 6>& a, char sep) {
  std::ostringstream os;
  for (int i = 0; i < 6; ++i) os << (i ? std::string(1, sep) : "") << a[i];
  return os.str();
}

// Shared flag: cover-engine ceiling in table entries, env fallback.
void add_max_memory(CLI::App* cmd, i64& slot) {
  cmd->add_option("--max-memory", slot, "Cover-scan ceiling in table entries")
      ->envname("HRANGE_MAX_MEMORY")
      ->check(CLI::PositiveNumber);
}

struct CoverArgs {
  std::string basis;
  i64 h = 0;
  std::string engine = "fast";
  i64 max_entries = CoverLimits{}.max_entries;
};

int cmd_cover(const CoverArgs& args) {
  const auto v = parse_i64_array<4>(args.basis);
  if (v[0] != 1) throw std::invalid_argument("basis must start with 1");
  const ConcreteBasis b{v[1], v[2], v[3], args.h};
  const CoverLimits limits{args.max_entries};
  const CoverResult cr =
      args.engine == "naive" ? cover_naive(b, limits) : cover_fast(b, limits);
  const Generation g = decompose_greedy(cr.cover, b);
  std::cout << cr.cover << '\t' << cr.first_gap << '\t' << g.q1 << '\t' << g.q2 << '\t' << g.q3
            << '\t' << g.q4 << '\n';
  return kExitOk;
}

struct InstantiateArgs {
  std::string family;
  std::string c;
  int r = 0;
  i64 t = 1;
};

int cmd_instantiate(const InstantiateArgs& args) {
  const ParametricBasis pb{parse_family(args.family), parse_cvector(args.c), args.r};
  const ConcreteBasis b = instantiate(pb, args.t);
  std::cout << 1 << ',' << b.a2 << ',' << b.a3 << ',' << b.a4 << '\t' << b.h << '\n';
  return kExitOk;
}

struct ExpandArgs {
  std::string family;
  std::string c;
  std::string rf;
};

int cmd_expand(const ExpandArgs& args) {
  const ParametricBasis pb{parse_family(args.family), parse_cvector(args.c), 0};
  if (!args.rf.empty()) {
    const CoverPolynomial p = expand_cover_polynomial(pb, parse_rf(args.rf));
    std::cout << p.p4 << '\t' << p.p3 << '\t' << p.p2 << '\t' << p.p1 << '\t' << p.p0 << '\n';
  } else {
    const BasisPolynomials bp = expand_basis_polynomials(pb);
    std::cout << "a2\t" << bp.a2[0] << '\t' << bp.a2[1] << '\n';
    std::cout << "a3\t" << bp.a3[0] << '\t' << bp.a3[1] << '\t' << bp.a3[2] << '\n';
    std::cout << "a4\t" << bp.a4[0] << '\t' << bp.a4[1] << '\t' << bp.a4[2] << '\t' << bp.a4[3]
              << '\n';
  }
  return kExitOk;
}

struct InferArgs {
  std::string family;
  std::string c;
  int r = 0;
  std::string t_samples;
  i64 max_entries = CoverLimits{}.max_entries;
};

int cmd_infer_rf(const InferArgs& args) {
  const ParametricBasis pb{parse_family(args.family), parse_cvector(args.c), args.r};
  const std::vector<i64> samples = parse_i64_list(args.t_samples);
  const RegularForm rf = infer_regular_form(pb, samples, CoverLimits{args.max_entries});
  std::cout << rf.k51 << ',' << rf.k52 << ',' << rf.k53 << ',' << rf.k54 << ':' << rf.c51 << ','
            << rf.c52 << ',' << rf.c53 << ',' << rf.c54 << '\n';
  return kExitOk;
}

struct SearchArgs {
  std::string spec_path;
  std::string out_path;
  std::string checkpoint_path;
  bool resume = false;
  bool no_prune = false;
  bool quiet = false;
  int threads = 0;
  i64 max_entries = 0;  // 0 = take from the spec file
};

int cmd_search(const SearchArgs& args) {
  using namespace hrange::search;
  SearchSpec spec = load_spec(args.spec_path);
  if (args.max_entries > 0) spec.limits.max_entries = args.max_entries;

  SearchOptions opt;
  opt.pruning = !args.no_prune;
  opt.threads = args.threads > 0
                    ? args.threads
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (!args.quiet)
    opt.progress = [](const PerTResult& r) { std::cout << progress_row(r) << '\n'; };
  if (!args.checkpoint_path.empty())
    opt.on_epoch_end = [&](const SearchState& s) { write_checkpoint(args.checkpoint_path, s); };
  if (args.resume) {
    if (args.checkpoint_path.empty())
      throw std::invalid_argument("--resume requires --checkpoint");
    opt.resume = read_checkpoint(args.checkpoint_path);
  }

  SearchReport report;
  try {
    report = search_family(spec, opt);
  } catch (const SweepInterruptedError& e) {
    std::cerr << "search interrupted (" << e.what() << ")";
    if (!args.checkpoint_path.empty())
      std::cerr << "; resume with --resume --checkpoint " << args.checkpoint_path;
    std::cerr << '\n';
    return kExitUsage;
  }

  if (args.out_path.empty()) {
    write_report_tsv(std::cout, report);
  } else {
    std::ofstream out(args.out_path, std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write report: " + args.out_path);
    write_report_tsv(out, report);
  }
  return kExitOk;
}

struct CrossoverArgs {
  std::string a;
  std::string b;
  i64 probe = 100;
  bool signs = false;
};

int cmd_crossover(const CrossoverArgs& args) {
  const auto pa = parse_i64_array<5>(args.a);
  const auto pb = parse_i64_array<5>(args.b);
  const CoverPolynomial A{pa[0], pa[1], pa[2], pa[3], pa[4]};
  const CoverPolynomial B{pb[0], pb[1], pb[2], pb[3], pb[4]};
  const analysis::CrossoverResult res = analysis::crossover(A, B, args.probe);
  if (res.t_star)
    std::cout << "t*=" << *res.t_star << '\n';
  else
    std::cout << "t*=none\n";
  if (args.signs)
    for (const auto& [t, sign] : res.sign_table) std::cout << t << '\t' << sign << '\n';
  return kExitOk;
}

struct ScheduleArgs {
  int r = 0;
  std::string t_range;
  std::vector<std::string> candidates;
  std::string infer_samples;
  i64 max_entries = CoverLimits{}.max_entries;
};

int cmd_schedule(const ScheduleArgs& args) {
  const auto colon = args.t_range.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--t must be lo:hi");
  const i64 t_lo = std::stoll(args.t_range.substr(0, colon));
  const i64 t_hi = std::stoll(args.t_range.substr(colon + 1));
  const CoverLimits limits{args.max_entries};

  std::vector<analysis::ScheduleCandidate> cands;
  for (const std::string& text : args.candidates) {
    const auto sep = text.find(':');
    if (sep == std::string::npos)
      throw std::invalid_argument("--candidate must be family:c21,c31,c32,c41,c42,c43");
    analysis::ScheduleCandidate cand;
    cand.family = parse_family(text.substr(0, sep));
    cand.c = parse_cvector(text.substr(sep + 1));
    if (!args.infer_samples.empty()) {
      // Validate a regular form first; fall back to DP if the fit fails.
      try {
        cand.rf = infer_regular_form({cand.family, cand.c, args.r},
                                     parse_i64_list(args.infer_samples), limits);
      } catch (const FitFailureError&) {
        cand.rf = std::nullopt;
      }
    }
    cands.push_back(std::move(cand));
  }

  const auto entries = analysis::best_schedule(args.r, t_lo, t_hi, cands, limits);
  for (const auto& e : entries) {
    std::cout << e.t_lo << '\t' << e.t_hi << '\t' << to_string(e.family.name) << '\t'
              << join_i64(e.c.as_array(), ',') << '\t'
              << (e.source == analysis::CoverSource::Polynomial ? "polynomial" : "dp") << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "paper";
  int threads = 0;
  i64 max_entries = CoverLimits{}.max_entries;
};

int cmd_verify(const VerifyArgs& args) {
  if (args.suite != "paper") throw std::invalid_argument("unknown suite: " + args.suite);
  verify::SuiteOptions opt;
  opt.max_entries = args.max_entries;
  opt.threads = args.threads > 0
                    ? args.threads
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return verify::run_paper_suite(std::cout, opt) ? kExitOk : kExitFixtureFailure;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Exact covers, sweeps and table reproduction for four-denomination "
               "postage stamp bases"};
  app.require_subcommand(1);
  // --h is a domain option (the stamp budget), so help is --help only.
  app.set_help_flag("--help", "Print help");
  app.option_defaults()->ignore_case(false);

  CoverArgs cover_args;
  auto* cover = app.add_subcommand("cover", "Cover, first gap and greedy decomposition");
  cover->set_help_flag("--help", "Print help");
  cover->add_option("--basis", cover_args.basis, "Basis as 1,a2,a3,a4")->required();
  cover->add_option("--h", cover_args.h, "Stamp budget")->required()->check(CLI::PositiveNumber);
  cover->add_option("--engine", cover_args.engine, "Cover engine")
      ->check(CLI::IsMember({"fast", "naive"}));
  add_max_memory(cover, cover_args.max_entries);

  InstantiateArgs inst_args;
  auto* inst = app.add_subcommand("instantiate", "Concrete basis of a family member at t");
  inst->add_option("--family", inst_args.family, "hofmeister|braunschaedel")->required();
  inst->add_option("--c", inst_args.c, "c21,c31,c32,c41,c42,c43")->required();
  inst->add_option("--r", inst_args.r, "Residue of h = 12t + r")->required();
  inst->add_option("--t", inst_args.t, "Parameter t >= 1")->required();

  ExpandArgs expand_args;
  auto* expand = app.add_subcommand("expand", "Exact polynomial expansion in t");
  expand->add_option("--family", expand_args.family, "hofmeister|braunschaedel")->required();
  expand->add_option("--c", expand_args.c, "c21,c31,c32,c41,c42,c43")->required();
  expand->add_option("--rf", expand_args.rf,
                     "Regular form k51,k52,k53,k54:c51,c52,c53,c54; expands the cover "
                     "polynomial instead of the basis polynomials");

  InferArgs infer_args;
  auto* infer = app.add_subcommand("infer-rf", "Guess and verify the regular form of the cover");
  infer->add_option("--family", infer_args.family, "hofmeister|braunschaedel")->required();
  infer->add_option("--c", infer_args.c, "c21,c31,c32,c41,c42,c43")->required();
  infer->add_option("--r", infer_args.r, "Residue of h = 12t + r")->required();
  infer->add_option("--t", infer_args.t_samples, "At least three distinct samples, e.g. 12,13,14")
      ->required();
  add_max_memory(infer, infer_args.max_entries);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Coefficient-box sweep from a JSON spec");
  search->add_option("--spec", search_args.spec_path, "Spec JSON file")->required();
  search->add_option("--out", search_args.out_path, "Report TSV file (default: stdout)");
  search->add_option("--checkpoint", search_args.checkpoint_path,
                     "Checkpoint file, written after each slice");
  search->add_flag("--resume", search_args.resume, "Continue from the checkpoint file");
  search->add_flag("--no-prune", search_args.no_prune, "Disable admissibility/target pruning");
  search->add_flag("--quiet", search_args.quiet, "Suppress progress rows");
  search->add_option("--threads", search_args.threads, "Worker threads (default: hardware)");
  add_max_memory(search, search_args.max_entries);

  CrossoverArgs cross_args;
  auto* cross = app.add_subcommand("crossover", "Least t from which one polynomial dominates");
  cross->add_option("--a", cross_args.a, "Polynomial p4,p3,p2,p1,p0")->required();
  cross->add_option("--b", cross_args.b, "Polynomial p4,p3,p2,p1,p0")->required();
  cross->add_option("--probe", cross_args.probe, "Probe range (default 100)");
  cross->add_flag("--signs", cross_args.signs, "Also print the sign table");

  ScheduleArgs sched_args;
  auto* sched = app.add_subcommand("schedule", "Best candidate per t over a range");
  sched->add_option("--r", sched_args.r, "Residue of h = 12t + r")->required();
  sched->add_option("--t", sched_args.t_range, "Range lo:hi")->required();
  sched->add_option("--candidate", sched_args.candidates, "family:c21,...,c43 (repeatable)")
      ->required();
  sched->add_option("--infer", sched_args.infer_samples,
                    "Samples for regular-form validation, e.g. 12,13,14 (default: DP covers)");
  add_max_memory(sched, sched_args.max_entries);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the published-results verification suite");
  verify->add_option("--suite", verify_args.suite, "Suite name (paper)");
  verify->add_option("--threads", verify_args.threads, "Worker threads for the sweeps");
  add_max_memory(verify, verify_args.max_entries);

  try {
    app.parse(argc, argv);
    if (cover->parsed()) return cmd_cover(cover_args);
    if (inst->parsed()) return cmd_instantiate(inst_args);
    if (expand->parsed()) return cmd_expand(expand_args);
    if (infer->parsed()) return cmd_infer_rf(infer_args);
    if (search->parsed()) return cmd_search(search_args);
    if (cross->parsed()) return cmd_crossover(cross_args);
    if (sched->parsed()) return cmd_schedule(sched_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const MemoryCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMemoryCap;
  } catch (const CorruptCheckpointError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCorruptCheckpoint;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hrange::cli
