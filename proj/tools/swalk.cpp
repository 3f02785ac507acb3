// Command-line front end. Every subcommand prints a JSON run record.
//
// Exit status: 0 success, 2 asserted bound violated, 1 computational error
// (overflow, resource limit), 64 usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swalk/bounds.hpp"
#include "swalk/errors.hpp"
#include "swalk/report.hpp"
#include "swalk/subwords.hpp"
#include "swalk/svg.hpp"
#include "swalk/sweep.hpp"
#include "swalk/symbols.hpp"
#include "swalk/walk.hpp"

namespace {

using namespace swalk;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolated = 2;
constexpr int kExitUsage = 64;

std::size_t parse_bytes(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw DomainError("bad memory limit '" + text + "'");
  }
  const std::string suffix = text.substr(pos);
  if (suffix.empty()) return v;
  if (suffix == "K" || suffix == "k") return v << 10;
  if (suffix == "M" || suffix == "m") return v << 20;
  if (suffix == "G" || suffix == "g") return v << 30;
  throw DomainError("bad memory limit suffix '" + suffix + "'");
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Json& record) { std::cout << record.dump(2) << "\n"; }

struct Globals {
  std::string memory_limit;
  unsigned workers = 1;
  bool floating = false;
};

struct BoundArgs {
  std::size_t lo = 7;
  std::size_t hi = 48;
  int64_t whole = 0;
  int64_t rt3 = 0;
};

void add_bound_args(CLI::App* cmd, BoundArgs& a) {
  cmd->add_option("lo", a.lo, "first separation class")->required();
  cmd->add_option("hi", a.hi, "last separation class")->required();
  cmd->add_option("bound_whole", a.whole, "integer part of the bound")->required();
  cmd->add_option("bound_rt3", a.rt3, "coefficient of sqrt(3) in the bound")->required();
}

template <NumberSystem N>
N bound_value(const BoundArgs& a) {
  return N::from_int(a.whole) + N::from_rt3(a.rt3);
}

Json bound_params(const BoundArgs& a) {
  return {{"lo", a.lo}, {"hi", a.hi}, {"bound_whole", a.whole}, {"bound_rt3", a.rt3}};
}

int run_ratio(const BoundArgs& a, const Globals& g) {
  Timer timer;
  ExtremaOptions opt;
  opt.workers = g.workers;
  bool holds = false;
  Json result;
  if (g.floating) {
    auto rep = assert_ratio_bounded<DoubleRep>(a.lo, a.hi, bound_value<DoubleRep>(a), opt);
    holds = rep.holds;
    result = to_json(rep);
  } else {
    auto rep = assert_ratio_bounded<Rt3Num>(a.lo, a.hi, bound_value<Rt3Num>(a), opt);
    holds = rep.holds;
    result = to_json(rep);
  }
  emit(run_record("assert-distance-ratio", bound_params(a), result, !g.floating, timer.seconds()));
  return holds ? kExitOk : kExitViolated;
}

int run_max_distance(const BoundArgs& a, const Globals& g) {
  Timer timer;
  ExtremaOptions opt;
  opt.workers = g.workers;
  bool holds = false;
  Json result;
  if (g.floating) {
    auto rep = assert_max_distance<DoubleRep>(a.lo, a.hi, bound_value<DoubleRep>(a), opt);
    holds = rep.holds;
    result = to_json(rep);
  } else {
    auto rep = assert_max_distance<Rt3Num>(a.lo, a.hi, bound_value<Rt3Num>(a), opt);
    holds = rep.holds;
    result = to_json(rep);
  }
  emit(run_record("assert-max-distance", bound_params(a), result, !g.floating, timer.seconds()));
  return holds ? kExitOk : kExitViolated;
}

int run_generate(std::size_t n, const std::string& as) {
  if (as == "points") {
    for (const auto& z : walk_prefix(n)) std::cout << z.x << ' ' << z.y << ' ' << z.z << '\n';
    return kExitOk;
  }
  const Word w = lambda_prefix(n);
  if (as == "word") {
    std::cout << format_word(w) << '\n';
  } else if (as == "steps") {
    for (Step s : phi(w)) std::cout << step_char(s);
    std::cout << '\n';
  } else {
    std::cout << format_orientations(psi(w)) << '\n';
  }
  return kExitOk;
}

struct PointsArgs {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t window = 16807;
  std::optional<std::size_t> chunk;
  std::string out;
};

int run_points(const PointsArgs& a, const Globals& g) {
  Timer timer;
  Json params = {{"start", a.start}, {"end", a.end}, {"window", a.window}};
  Json result;
  if (a.chunk) {
    params["chunk"] = *a.chunk;
    if (a.start != 0) throw DomainError("--start is not supported with --chunk");
    const auto plan = chunk_plan(a.end, a.window, *a.chunk);
    std::ofstream out;
    if (!a.out.empty()) {
      out.open(a.out);
      if (!out) throw std::runtime_error("cannot write " + a.out);
    }
    auto results = run_chunks(plan, a.window, g.workers, [&](const ChunkResult& r) {
      if (out.is_open()) out << to_json_line(r) << '\n' << std::flush;
    });
    result = to_json(merge_chunk_results(results));
    result["chunks"] = plan.size();
  } else {
    const auto pts = walk_prefix(a.end);
    const CollinearReport rep = count_max_collinear(pts, a.start, a.end, a.window);
    result = to_json(rep);
    Json coords = Json::array();
    for (std::size_t p : rep.witness_indices) coords.push_back(to_json(pts[p]));
    result["witness_points"] = coords;
    if (!a.out.empty()) {
      std::ofstream out(a.out);
      out << to_json_line(ChunkResult{a.start, a.end, rep.max_points, rep.witness_indices}) << '\n';
    }
  }
  emit(run_record("count-collinear-points", params, result, true, timer.seconds()));
  return kExitOk;
}

int run_merge(const std::vector<std::string>& files) {
  Timer timer;
  std::vector<ChunkResult> all;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw std::runtime_error("cannot read " + f);
    auto part = read_chunk_results(in);
    all.insert(all.end(), part.begin(), part.end());
  }
  Json result = to_json(merge_chunk_results(all));
  result["records"] = all.size();
  emit(run_record("merge-results", {{"files", files}}, result, true, timer.seconds()));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale checks for a collinearity-avoiding walk"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--memory-limit", g.memory_limit, "memory budget, e.g. 2G");
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--floating", g.floating, "floating-point cross-check mode")->group("");

  std::size_t gen_n = 0;
  std::string gen_as = "word";
  auto* gen = app.add_subcommand("generate", "print a prefix of the fixed point");
  gen->add_option("n", gen_n, "number of symbols")->required();
  gen->add_option("--as", gen_as, "word | steps | orientations | points")
      ->check(CLI::IsMember({"word", "steps", "orientations", "points"}));

  std::size_t lns_n = 0;
  auto* lns = app.add_subcommand("last-new-subword", "index of the last new subword of length n");
  lns->add_option("n", lns_n, "subword length")->required()->check(CLI::PositiveNumber);

  auto* o0 = app.add_subcommand("order0-extrema", "perpendicular norm extrema for separations 1..6");

  BoundArgs ratio_args, maxd_args;
  auto* ratio = app.add_subcommand("assert-distance-ratio", "bound (c+1)h(d)/(d l(c)) over a range");
  add_bound_args(ratio, ratio_args);
  auto* maxd = app.add_subcommand("assert-max-distance", "bound h(d)/d over a range");
  add_bound_args(maxd, maxd_args);

  std::size_t trap_window = 0;
  bool half_lines = false;
  bool table_normalization = false;
  auto* trap = app.add_subcommand("count-collinear-trapezoids", "most trapezoids within a window met by one line");
  trap->add_option("window", trap_window, "largest index difference")->required();
  trap->add_flag("--half-lines", half_lines, "sweep rays instead of lines")->group("");
  trap->add_flag("--table-normalization", table_normalization, "normalize with the fixed composition table")->group("");

  PointsArgs pts_args;
  std::size_t chunk_value = 0;
  auto* pts = app.add_subcommand("count-collinear-points", "most collinear walk points within a window");
  pts->add_option("--start", pts_args.start, "first index");
  pts->add_option("--end", pts_args.end, "last index")->required();
  pts->add_option("--window", pts_args.window, "pairs must satisfy q - p < window");
  auto* chunk_opt = pts->add_option("--chunk", chunk_value, "chunk length for overlapping chunks");
  pts->add_option("--out", pts_args.out, "write JSON-lines chunk records here");

  std::size_t draw_count = 0;
  std::string draw_out;
  bool draw_recursive = false;
  auto* draw = app.add_subcommand("draw-trapezoids", "render the trapezoid chain as SVG");
  draw->add_option("count", draw_count, "number of order-0 trapezoids")->required()->check(CLI::PositiveNumber);
  draw->add_option("out", draw_out, "output SVG file")->required();
  draw->add_flag("--recursive", draw_recursive, "outline higher-order trapezoids too");

  std::vector<std::string> merge_files;
  auto* merge = app.add_subcommand("merge-results", "merge JSON-lines chunk records");
  merge->add_option("files", merge_files, "record files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!g.memory_limit.empty()) set_memory_budget(parse_bytes(g.memory_limit));

    if (*gen) return run_generate(gen_n, gen_as);

    if (*lns) {
      Timer timer;
      const NoveltyIndex r = index_of_last_new_subword(lns_n);
      emit(run_record("last-new-subword", {{"n", lns_n}}, to_json(r), true, timer.seconds()));
      return kExitOk;
    }

    if (*o0) {
      Timer timer;
      Json rows = Json::array();
      for (std::size_t c = 1; c <= 6; ++c) rows.push_back(to_json(order0_extrema(c)));
      emit(run_record("order0-extrema", Json::object(), rows, true, timer.seconds()));
      return kExitOk;
    }

    if (*ratio) return run_ratio(ratio_args, g);
    if (*maxd) return run_max_distance(maxd_args, g);

    if (*trap) {
      Timer timer;
      StabbingOptions opt;
      opt.workers = g.workers;
      opt.mode = half_lines ? SweepLine::ray : SweepLine::full;
      opt.rule = table_normalization ? NormalizationRule::tabulated : NormalizationRule::isometry;
      const StabbingReport rep = max_intersected(trap_window, opt);
      emit(run_record("count-collinear-trapezoids", {{"window", trap_window}}, to_json(rep), true, timer.seconds()));
      return kExitOk;
    }

    if (*pts) {
      if (chunk_opt->count() > 0) pts_args.chunk = chunk_value;
      return run_points(pts_args, g);
    }

    if (*draw) {
      Timer timer;
      std::ofstream out(draw_out);
      if (!out) throw std::runtime_error("cannot write " + draw_out);
      out << draw_trapezoids_svg(draw_count, draw_recursive);
      emit(run_record("draw-trapezoids", {{"count", draw_count}, {"recursive", draw_recursive}, {"out", draw_out}},
                      {{"written", true}}, true, timer.seconds()));
      return kExitOk;
    }

    if (*merge) return run_merge(merge_files);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
