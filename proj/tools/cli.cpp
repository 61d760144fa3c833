#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "resonance/catalog.hpp"
#include "resonance/deficiency.hpp"
#include "resonance/io.hpp"
#include "resonance/oracle.hpp"
#include "resonance/quad.hpp"
#include "resonance/solver.hpp"
#include "resonance/stats.hpp"

namespace resonance::cli {

namespace {

struct CommonOptions {
  int max_coord = 0;
  std::string mode = "complete";
  bool expand_signs = false;
  bool progress = false;
  unsigned workers = 0;
  std::string out_path = "-";
};

struct SolveOptions {
  std::string format = "jsonl";
};

struct ClassesOptions {
  bool list = false;
  bool deficiencies = false;
};

struct StatsOptions {
  std::string in_path;
  std::string table = "all";
  std::int64_t step = 50;
  std::int64_t ring_width = 50;
  std::optional<std::int64_t> ring_inner;
  std::optional<std::int64_t> ring_outer;
  std::vector<int> vector;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DeficiencyMode parse_mode(const std::string& name) {
  if (name == "complete") return DeficiencyMode::complete;
  if (name == "paper-compat") return DeficiencyMode::paper_compat;
  throw UsageError("unknown mode '" + name + "' (expected complete or paper-compat)");
}

// Opens --out, or hands back `fallback` for "-".
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open output file '" + path + "'");
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }
  void close() {
    stream_->flush();
    if (!*stream_) throw IoError("failed writing output");
    if (file_) {
      file_->close();
      if (!*file_) throw IoError("failed closing output file");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

SolverConfig make_config(const CommonOptions& common, std::ostream& err) {
  if (common.max_coord < 1) throw UsageError("--max-coord must be >= 1");
  SolverConfig config;
  config.domain_limit = common.max_coord;
  config.mode = parse_mode(common.mode);
  config.expand_signs = common.expand_signs;
  config.workers = common.workers > 0 ? common.workers : default_worker_count();
  if (common.progress) {
    config.progress = [&err](std::string_view line) { err << "[progress] " << line << std::endl; };
  }
  return config;
}

int run_solve(const CommonOptions& common, const SolveOptions& opts, std::ostream& out,
              std::ostream& err) {
  const auto format = parse_format(opts.format);
  if (!format) throw UsageError("unknown format '" + opts.format + "' (expected csv, jsonl or none)");
  const auto config = make_config(common, err);
  OutputTarget target(common.out_path, out);
  SolutionWriter writer(target.stream(), *format);
  const auto report = solve_stream(
      config, [&](DeficiencyPoint, std::span<const ResonantQuad> batch) { writer.write(batch); });
  writer.flush();
  target.close();
  write_report(err, report);
  return kOk;
}

int run_classes(const CommonOptions& common, const ClassesOptions& opts, std::ostream& out,
                std::ostream& err) {
  if (common.max_coord < 1) throw UsageError("--max-coord must be >= 1");
  const auto mode = parse_mode(common.mode);
  const auto catalog = build_class_catalog(common.max_coord);
  OutputTarget target(common.out_path, out);
  std::ostream& data = target.stream();
  const bool listing = opts.list || opts.deficiencies;
  std::ostream& summary = listing ? err : data;
  summary << "D," << catalog.domain_limit() << '\n'
          << "classes," << catalog.size() << '\n'
          << "weights," << catalog.weight_count() << '\n'
          << "vectors," << catalog.vector_count() << '\n';
  if (opts.list) {
    data << "q,gamma,m,n\n";
    for (const auto& r : catalog.records()) {
      for (const auto& w : r.weights) {
        for (const auto& k : w.vectors) data << r.q << ',' << w.gamma << ',' << k.m << ',' << k.n << '\n';
      }
    }
  }
  if (opts.deficiencies) {
    if (opts.list) data << '\n';
    data << "q,dm,dn\n";
    for (const auto& r : catalog.records()) {
      for (const auto& p : deficiency_set(r, mode)) data << r.q << ',' << p.dm << ',' << p.dn << '\n';
    }
  }
  target.close();
  return kOk;
}

void write_series(std::ostream& os, std::span<const SeriesPoint> series) {
  os << "D,count\n";
  for (const auto& p : series) os << p.d << ',' << p.count << '\n';
}

int run_stats(const CommonOptions& common, const StatsOptions& opts, std::ostream& out,
              std::ostream& err) {
  static const std::vector<std::string> kTables{"square", "circle", "ring", "histogram", "all"};
  if (std::find(kTables.begin(), kTables.end(), opts.table) == kTables.end()) {
    throw UsageError("unknown table '" + opts.table + "'");
  }
  if (opts.step < 1 || opts.ring_width < 1) throw UsageError("--step and --ring-width must be >= 1");
  if (opts.ring_inner.has_value() != opts.ring_outer.has_value()) {
    throw UsageError("--ring-inner and --ring-outer go together");
  }
  if (!opts.vector.empty() && opts.vector.size() != 2) throw UsageError("--vector takes m,n");

  std::optional<DomainShape> single_ring;
  if (opts.ring_inner) single_ring = DomainShape::ring(*opts.ring_inner, *opts.ring_outer);
  std::uint64_t single_ring_count = 0;

  std::unique_ptr<StatsAccumulator> acc;
  std::string setting;
  if (!opts.in_path.empty()) {
    std::ifstream in(opts.in_path, std::ios::binary);
    if (!in) throw IoError("cannot open input file '" + opts.in_path + "'");
    const auto solutions = read_solutions(in);
    std::int32_t d = common.max_coord;
    if (d < 1) {
      d = 1;
      for (const auto& q : solutions) d = std::max(d, max_abs_coordinate(q));
    }
    acc = std::make_unique<StatsAccumulator>(d, series_values(opts.step, d), opts.ring_width);
    for (const auto& q : solutions) {
      acc->add(q);
      if (single_ring && single_ring->contains(q)) ++single_ring_count;
    }
    setting = "as read from " + opts.in_path;
  } else {
    auto config = make_config(common, err);
    acc = std::make_unique<StatsAccumulator>(config.domain_limit,
                                             series_values(opts.step, config.domain_limit),
                                             opts.ring_width);
    const auto report = solve_stream(config, [&](DeficiencyPoint, std::span<const ResonantQuad> batch) {
      acc->add(batch);
      if (single_ring) {
        for (const auto& q : batch) single_ring_count += single_ring->contains(q);
      }
    });
    write_report(err, report);
    setting = std::string(to_string(config.mode)) + ", " +
              (config.expand_signs ? "sign-expanded" : "canonical");
  }

  OutputTarget target(common.out_path, out);
  std::ostream& data = target.stream();
  const bool all = opts.table == "all";
  const auto square = acc->series(DomainShape::Kind::square);
  const auto circle = acc->series(DomainShape::Kind::circle);
  const auto ring = acc->series(DomainShape::Kind::ring);
  if (all || opts.table == "square") {
    if (all) data << "# square\n";
    write_series(data, square);
  }
  if (all || opts.table == "circle") {
    if (all) data << "\n# circle\n";
    write_series(data, circle);
  }
  if (all || opts.table == "ring") {
    if (all) data << "\n# ring width " << opts.ring_width << '\n';
    write_series(data, ring);
  }
  if (all || opts.table == "histogram") {
    if (all) data << "\n# histogram\n";
    data << "multiplicity,vector_count\n";
    for (const auto& [mult, count] : acc->histogram().bins) data << mult << ',' << count << '\n';
  }
  target.close();

  err << "stats (" << setting << ")\n"
      << "  solutions            " << acc->solution_count() << '\n';
  const auto sq_fit = fit_power_law(square);
  const auto ci_fit = fit_power_law(circle);
  const auto ring_fit = fit_linear(ring);
  err << std::setprecision(4) << "  square log-log slope " << sq_fit.exponent << " (r2 " << sq_fit.r_squared << ")\n"
      << "  circle log-log slope " << ci_fit.exponent << " (r2 " << ci_fit.r_squared << ")\n"
      << "  ring linear slope    " << ring_fit.slope << " (r2 " << ring_fit.r_squared << ")\n";
  if (single_ring) {
    err << "  ring (" << single_ring->inner << ", " << single_ring->outer << "] " << single_ring_count << '\n';
  }
  if (!opts.vector.empty()) {
    const WaveVector k{opts.vector[0], opts.vector[1]};
    err << "  multiplicity of " << k << ' ' << acc->multiplicity(k) << '\n';
  }
  return kOk;
}

int run_verify(const CommonOptions& common, std::ostream& out, std::ostream& err) {
  if (common.max_coord < 1 || common.max_coord > kOracleMaxDomain) {
    throw UsageError("verify needs 1 <= --max-coord <= " + std::to_string(kOracleMaxDomain));
  }
  const auto config = make_config(common, err);
  const auto solved = solve(config);
  const auto oracle = brute_force(config.domain_limit, config.expand_signs, config.workers);
  const auto report = compare(solved.solutions, oracle, config.domain_limit);
  write_report(err, solved.report);

  OutputTarget target(common.out_path, out);
  std::ostream& data = target.stream();
  data << "verify D=" << report.domain_limit << " mode=" << to_string(config.mode)
       << " setting=" << (config.expand_signs ? "sign-expanded" : "canonical")
       << " solver=" << report.solver_count << " oracle=" << report.oracle_count
       << " missing=" << report.missing.size() << " extra=" << report.extra.size() << ' '
       << (report.matches() ? "MATCH" : "MISMATCH") << '\n';
  for (const auto& q : report.missing) data << "missing " << q << '\n';
  for (const auto& q : report.extra) data << "extra " << q << '\n';
  target.close();
  return report.matches() ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-class four-wave resonance enumeration for omega = (m^2 + n^2)^(1/4)",
               "resonance"};
  app.require_subcommand(1);

  CommonOptions common;
  SolveOptions solve_opts;
  ClassesOptions classes_opts;
  StatsOptions stats_opts;

  auto add_common = [&](CLI::App* sub, bool with_domain_flags) {
    sub->add_option("-D,--max-coord", common.max_coord, "Domain limit D: |m|, |n| <= D");
    sub->add_option("-o,--out", common.out_path, "Output file ('-' for standard output)");
    if (with_domain_flags) {
      sub->add_option("--mode", common.mode, "Deficiency mode: complete or paper-compat")
          ->capture_default_str();
      sub->add_flag("--expand-signs", common.expand_signs,
                    "Emit the distinct axis reflections of every solution");
      sub->add_flag("--progress", common.progress, "Per-pass progress on standard error");
      sub->add_option("--workers", common.workers,
                      "Worker threads (default: RESONANCE_WORKERS or hardware count)");
    }
  };

  auto* solve_cmd = app.add_subcommand("solve", "Enumerate two-class solutions");
  add_common(solve_cmd, true);
  solve_cmd->add_option("--format", solve_opts.format, "csv, jsonl or none")->capture_default_str();

  auto* classes_cmd = app.add_subcommand("classes", "Summarize the class catalog");
  add_common(classes_cmd, false);
  classes_cmd->add_option("--mode", common.mode, "Deficiency mode for --deficiencies");
  classes_cmd->add_flag("--list", classes_opts.list, "List vectors as CSV q,gamma,m,n");
  classes_cmd->add_flag("--deficiencies", classes_opts.deficiencies, "List deficiency sets as CSV q,dm,dn");

  auto* stats_cmd = app.add_subcommand("stats", "Domain series and multiplicity histogram");
  add_common(stats_cmd, true);
  stats_cmd->add_option("--in", stats_opts.in_path, "Solver output (CSV or JSONL); otherwise solve --max-coord");
  stats_cmd->add_option("--table", stats_opts.table, "square, circle, ring, histogram or all")
      ->capture_default_str();
  stats_cmd->add_option("--step", stats_opts.step, "Series spacing of D")->capture_default_str();
  stats_cmd->add_option("--ring-width", stats_opts.ring_width, "Ring width")->capture_default_str();
  stats_cmd->add_option("--ring-inner", stats_opts.ring_inner, "Single ring: exclusive inner radius");
  stats_cmd->add_option("--ring-outer", stats_opts.ring_outer, "Single ring: outer radius");
  stats_cmd->add_option("--vector", stats_opts.vector, "Report the multiplicity of m,n")->delimiter(',');

  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver against brute force (D <= 12)");
  add_common(verify_cmd, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(common, solve_opts, out, err);
    if (classes_cmd->parsed()) return run_classes(common, classes_opts, out, err);
    if (stats_cmd->parsed()) return run_stats(common, stats_opts, out, err);
    if (verify_cmd->parsed()) return run_verify(common, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace resonance::cli
