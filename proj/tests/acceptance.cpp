// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Usage: resonance_acceptance [criterion...]   (default: all eight)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "resonance/catalog.hpp"
#include "resonance/deficiency.hpp"
#include "resonance/oracle.hpp"
#include "resonance/quad.hpp"
#include "resonance/solver.hpp"
#include "resonance/stats.hpp"

namespace fs = std::filesystem;
using namespace resonance;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int precision = 3) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(precision);
  os << v;
  return os.str();
}

std::string deviation(double got, double want) {
  return fmt(100.0 * (got - want) / want, 1) + "%";
}

Outcome oracle_equivalence() {
  Outcome o{true, "", {}};
  const auto t0 = Clock::now();
  for (const std::string d : {"4", "6", "8", "10", "12"}) {
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--max-coord", d}, out, err);
    auto line = out.str();
    line = line.substr(0, line.find('\n'));
    o.details.push_back(line + " (exit " + std::to_string(code) + ")");
    o.pass = o.pass && code == cli::kOk;
  }
  o.summary = "verify D=4,6,8,10,12 complete/canonical, " + fmt(seconds_since(t0), 1) + " s";
  return o;
}

Outcome class_count() {
  const auto catalog = build_class_catalog(1000);
  const std::size_t expected = 283583;
  const auto pool = sieve_candidate_count(1000);
  Outcome o;
  o.pass = catalog.size() == expected;
  o.summary = "classes(1000) = " + std::to_string(catalog.size()) + ", expected " +
              std::to_string(expected);
  o.details.push_back("sieve candidate pool (representable norms <= 2 D^2): " + std::to_string(pool) +
                      " (reference 384145)");
  o.details.push_back("classes with no vector in [0, D]^2: " + std::to_string(pool - catalog.size()) +
                      " (reference 100562)");
  return o;
}

Outcome worked_example() {
  const std::vector<DeficiencyPoint> expected = [] {
    std::vector<DeficiencyPoint> p{{2, 4}, {2, 6}, {12, 4}, {12, 6}, {4, 2}, {4, 12},
                                   {6, 2}, {6, 12}, {6, 6}, {6, 8}, {8, 6}, {8, 8}};
    std::sort(p.begin(), p.end());
    return p;
  }();
  Outcome o{true, "", {}};
  for (const std::int32_t d : {7, 8, 50}) {
    const auto got = gamma_deficiency_set(50, 1, d, DeficiencyMode::paper_compat);
    o.pass = o.pass && got == expected;
    std::ostringstream os;
    os << "D=" << d << ":";
    for (const auto& p : got) os << ' ' << p;
    o.details.push_back(os.str());
  }
  o.summary = "gamma-deficiency set of class 50, weight 1, paper-compat = 12 reference points";
  return o;
}

Outcome invariant_suite() {
  Outcome o{true, "", {}};
  for (const std::int32_t d : {7, 12, 100}) {
    for (const bool expand : {false, true}) {
      SolverConfig c;
      c.domain_limit = d;
      c.expand_signs = expand;
      std::size_t total = 0, violations = 0;
      std::optional<ResonantQuad> prev;
      solve_stream(c, [&](DeficiencyPoint, std::span<const ResonantQuad> batch) {
        for (const auto& q : batch) {
          ++total;
          const bool ok = !quad_violation(q) && q.k1.m + q.k2.m == q.k3.m + q.k4.m &&
                          q.k1.n + q.k2.n == q.k3.n + q.k4.n && omega_balance(q) && q.q1 != q.q2 &&
                          q.k1 != q.k3 && canonical_representative(q, expand) == q &&
                          max_abs_coordinate(q) <= d && (!prev || solution_order(*prev, q));
          violations += !ok;
          prev = q;
        }
      });
      o.pass = o.pass && violations == 0 && total > 0;
      o.details.push_back("D=" + std::to_string(d) + (expand ? " sign-expanded" : " canonical") +
                          ": " + std::to_string(total) + " quads, " + std::to_string(violations) +
                          " violations");
    }
  }
  o.summary = "momentum, omega balance, two classes, nontrivial, canonical unique at D=7,12,100";
  return o;
}

Outcome determinism() {
  const auto dir = fs::temp_directory_path();
  const auto a = dir / "resonance_acceptance_w1.jsonl";
  const auto b = dir / "resonance_acceptance_w2.jsonl";
  std::ostringstream out, err;
  const int ca = cli::run({"solve", "--max-coord", "100", "--workers", "1", "--out", a.string()}, out, err);
  const int cb = cli::run({"solve", "--max-coord", "100", "--workers", "2", "--out", b.string()}, out, err);
  Outcome o;
  bool same = ca == 0 && cb == 0 && fs::file_size(a) == fs::file_size(b);
  if (same) {
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    std::vector<char> ba(1 << 20), bb(1 << 20);
    while (same && fa && fb) {
      fa.read(ba.data(), static_cast<std::streamsize>(ba.size()));
      fb.read(bb.data(), static_cast<std::streamsize>(bb.size()));
      same = fa.gcount() == fb.gcount() && std::equal(ba.begin(), ba.begin() + fa.gcount(), bb.begin());
    }
  }
  o.pass = same;
  o.summary = "solve --max-coord 100 with 1 and 2 workers: " +
              (same ? std::string("byte-identical") : std::string("outputs differ"));
  o.details.push_back(std::to_string(ca == 0 ? fs::file_size(a) : 0) + " bytes each");
  fs::remove(a);
  fs::remove(b);
  return o;
}

Outcome performance() {
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int code = cli::run({"solve", "--max-coord", "1000", "--format", "none"}, out, err);
  const double wall = seconds_since(t0);
  Outcome o;
  o.pass = code == cli::kOk && wall < 600.0;
  o.summary = "solve --max-coord 1000 (complete, canonical, count-only sink): " + fmt(wall, 1) +
              " s, limit 600 s";
  std::istringstream report(err.str());
  for (std::string line; std::getline(report, line);) o.details.push_back(line);
  return o;
}

// Criteria 7 and 8 share one D = 1000 run per deficiency mode. Each run
// feeds canonical output to two accumulators: as is, and expanded over axis
// reflections.
struct ConventionRun {
  RunReport report;
  std::unique_ptr<StatsAccumulator> canonical;
  std::unique_ptr<StatsAccumulator> expanded;
};

const ConventionRun& convention_run(DeficiencyMode mode) {
  static std::map<DeficiencyMode, ConventionRun> runs;
  auto [it, fresh] = runs.try_emplace(mode);
  if (fresh) {
    auto& r = it->second;
    r.canonical = std::make_unique<StatsAccumulator>(1000, series_values(50, 1000), 50, false);
    r.expanded = std::make_unique<StatsAccumulator>(1000, series_values(50, 1000), 50, true);
    SolverConfig c;
    c.domain_limit = 1000;
    c.mode = mode;
    c.workers = default_worker_count();
    r.report = solve_stream(c, [&](DeficiencyPoint, std::span<const ResonantQuad> b) {
      r.canonical->add(b);
      r.expanded->add(b);
    });
  }
  return it->second;
}

Outcome report_comparisons() {
  Outcome o;
  o.pass = true;  // report-only
  o.summary = "report-only at D=1000 against published aggregates";
  auto row = [&](const std::string& name, double got, double want) {
    o.details.push_back("  " + name + ": " + fmt(got, 0) + " vs reference " + fmt(want, 0) + " (" +
                        deviation(got, want) + ")");
  };
  for (const auto mode : {DeficiencyMode::paper_compat, DeficiencyMode::complete}) {
    const auto& run = convention_run(mode);
    o.details.push_back(std::string("convention ") + to_string(mode) + ": " +
                        std::to_string(run.report.solution_count) + " canonical solutions, solve " +
                        fmt(run.report.total_seconds, 1) + " s");
    row("pass-2 discarded classes", static_cast<double>(run.report.classes_discarded), 313);
    row("halves stored", static_cast<double>(run.report.half_count), 6692832);
    row("halves on interaction points", static_cast<double>(run.report.linked_half_count), 6692832);
    row("linked halves, (u,v) ~ (-v,-u)", static_cast<double>(run.report.linked_conjugate_pairs), 6692832);
    for (const auto* acc : {run.canonical.get(), run.expanded.get()}) {
      const std::string setting = acc->expand_reflections() ? "sign-expanded" : "canonical";
      const auto hist = acc->histogram();
      const auto bin2 = hist.bins.count(2) ? hist.bins.at(2) : 0;
      row("multiplicity of (1000,1000), " + setting, static_cast<double>(acc->multiplicity({1000, 1000})),
          11075);
      row("vectors with multiplicity 2, " + setting, static_cast<double>(bin2), 7);
    }
  }
  return o;
}

Outcome trend_checks() {
  Outcome o;
  o.pass = true;
  o.summary = "series D=50..1000 step 50, canonical";
  for (const auto mode : {DeficiencyMode::paper_compat, DeficiencyMode::complete}) {
    const auto& acc = *convention_run(mode).canonical;
    const auto square = acc.series(DomainShape::Kind::square);
    const auto circle = acc.series(DomainShape::Kind::circle);
    const auto ring = acc.series(DomainShape::Kind::ring);
    auto nondecreasing = [](const std::vector<SeriesPoint>& s) {
      return std::is_sorted(s.begin(), s.end(),
                            [](const SeriesPoint& a, const SeriesPoint& b) { return a.count < b.count; });
    };
    const bool monotone = nondecreasing(square) && nondecreasing(circle);
    o.pass = o.pass && monotone;
    double max_gap = 0.0;
    for (std::size_t i = 0; i < square.size(); ++i) {
      if (square[i].d > 500 || square[i].count == 0) continue;
      max_gap = std::max(max_gap, 1.0 - static_cast<double>(circle[i].count) /
                                            static_cast<double>(square[i].count));
    }
    std::vector<SeriesPoint> ring_tail;
    std::copy_if(ring.begin(), ring.end(), std::back_inserter(ring_tail),
                 [](const SeriesPoint& p) { return p.d >= 100; });
    const auto sq_fit = fit_power_law(square);
    const auto ci_fit = fit_power_law(circle);
    const auto ring_fit = fit_linear(ring_tail);
    o.details.push_back(std::string("convention ") + to_string(mode) +
                        ": square/circle nondecreasing = " + (monotone ? "yes" : "no"));
    o.details.push_back("  square log-log slope " + fmt(sq_fit.exponent) + " (r2 " +
                        fmt(sq_fit.r_squared, 4) + ")");
    o.details.push_back("  circle log-log slope " + fmt(ci_fit.exponent) + " (r2 " +
                        fmt(ci_fit.r_squared, 4) + ")");
    o.details.push_back("  largest circle shortfall vs square for D <= 500: " + fmt(100.0 * max_gap, 1) +
                        "%");
    o.details.push_back("  ring width 50, D=100..1000: slope " + fmt(ring_fit.slope, 1) +
                        " per unit D (r2 " + fmt(ring_fit.r_squared, 4) + ")");
    std::ostringstream table;
    table << "  D:square/circle/ring";
    for (std::size_t i = 0; i < square.size(); ++i) {
      table << ' ' << square[i].d << ':' << square[i].count << '/' << circle[i].count << '/'
            << ring[i].count;
    }
    o.details.push_back(table.str());
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"class count", class_count},
      {"worked example", worked_example},
      {"invariant suite", invariant_suite},
      {"determinism", determinism},
      {"performance", performance},
      {"report-only comparisons", report_comparisons},
      {"trend checks", trend_checks},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoul(argv[i]));
  if (selected.empty()) {
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.insert(i);
  }

  int failures = 0;
  for (const auto n : selected) {
    if (n < 1 || n > criteria.size()) {
      std::cerr << "no criterion " << n << '\n';
      return 2;
    }
    const auto& [name, fn] = criteria[n - 1];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << n << "] " << name << ": " << o.summary << '\n';
    for (const auto& d : o.details) std::cout << "       " << d << '\n';
    std::cout.flush();
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
