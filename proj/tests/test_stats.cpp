#include <gtest/gtest.h>

#include "resonance/quad.hpp"
#include "resonance/solver.hpp"
#include "resonance/stats.hpp"

namespace resonance {
namespace {

const ResonantQuad kExample = make_quad({5, 5}, {1, -5}, {5, -5}, {1, 5});

std::vector<ResonantQuad> solutions_at(std::int32_t d, bool expand = false) {
  SolverConfig c;
  c.domain_limit = d;
  c.expand_signs = expand;
  return solve(c).solutions;
}

TEST(DomainShape, Predicates) {
  EXPECT_TRUE(DomainShape::circle(8).contains(kExample));
  EXPECT_FALSE(DomainShape::circle(7).contains(kExample));
  EXPECT_TRUE(DomainShape::square(5).contains(kExample));
  EXPECT_FALSE(DomainShape::square(4).contains(kExample));
  // Norms 26 and 50: inside (5, 8], outside (6, 8].
  EXPECT_TRUE(DomainShape::ring(5, 8).contains(kExample));
  EXPECT_FALSE(DomainShape::ring(6, 8).contains(kExample));
  EXPECT_TRUE(DomainShape::ring(-1, 8).contains(WaveVector{0, 0}));
  EXPECT_STREQ(to_string(DomainShape::Kind::ring), "ring");
}

TEST(FilterDomain, SubsetAndIdempotent) {
  const auto all = solutions_at(10);
  EXPECT_EQ(filter_domain(all, DomainShape::ring(0, 1000)), all);
  const auto circle = filter_domain(all, DomainShape::circle(8));
  EXPECT_LT(circle.size(), all.size());
  EXPECT_TRUE(std::includes(all.begin(), all.end(), circle.begin(), circle.end(), solution_order));
  EXPECT_EQ(filter_domain(circle, DomainShape::circle(8)), circle);
}

TEST(DomainSeries, EmptyAndMonotone) {
  const std::vector<std::int64_t> ds{2, 4, 6, 8, 10};
  for (const auto& p : domain_series({}, ds, DomainShape::Kind::square)) EXPECT_EQ(p.count, 0u);

  const auto all = solutions_at(10);
  for (const auto kind : {DomainShape::Kind::square, DomainShape::Kind::circle}) {
    const auto s = domain_series(all, ds, kind);
    ASSERT_EQ(s.size(), ds.size());
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LE(s[i - 1].count, s[i].count);
  }
  const auto square = domain_series(all, ds, DomainShape::Kind::square);
  EXPECT_EQ(square.back().count, all.size());
}

// The square series at D' equals a fresh solve at D'.
TEST(DomainSeries, SquareMatchesSmallerSolve) {
  const auto all = solutions_at(16);
  const std::vector<std::int64_t> ds{7, 12};
  const auto s = domain_series(all, ds, DomainShape::Kind::square);
  EXPECT_EQ(s[0].count, 947u);
  EXPECT_EQ(s[1].count, solutions_at(12).size());
}

TEST(Multiplicity, SingleSolution) {
  const std::vector<ResonantQuad> one{kExample};
  const auto h = multiplicity_histogram(one);
  EXPECT_EQ(h.bins, (std::map<std::uint64_t, std::uint64_t>{{1, 4}}));
  EXPECT_EQ(h.mass(), 4u);

  const auto repeated = make_quad({1, 2}, {2, 1}, {2, 1}, {1, 2});
  const auto m = vector_multiplicities(std::vector<ResonantQuad>{repeated});
  EXPECT_EQ(m.at({1, 2}), 2u);
}

TEST(Multiplicity, MassIdentity) {
  for (const bool expand : {false, true}) {
    const auto all = solutions_at(12, expand);
    EXPECT_EQ(multiplicity_histogram(all).mass(), 4 * all.size());
  }
}

// Streaming aggregation and the batch functions take different routes to
// the same numbers.
TEST(StatsAccumulator, AgreesWithBatch) {
  const std::int32_t d = 24;
  const auto all = solutions_at(d);
  const auto ds = series_values(3, d);
  for (const std::int64_t width : {5, 50}) {
    StatsAccumulator acc(d, ds, width);
    acc.add(all);
    EXPECT_EQ(acc.solution_count(), all.size());
    for (const auto kind :
         {DomainShape::Kind::square, DomainShape::Kind::circle, DomainShape::Kind::ring}) {
      const auto expected = domain_series(all, ds, kind, width);
      const auto got = acc.series(kind);
      ASSERT_EQ(got.size(), expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].d, expected[i].d);
        EXPECT_EQ(got[i].count, expected[i].count) << to_string(kind) << " D=" << got[i].d;
      }
    }
    EXPECT_EQ(acc.histogram().bins, multiplicity_histogram(all).bins);
    const auto mult = vector_multiplicities(all);
    for (const auto& [k, count] : mult) EXPECT_EQ(acc.multiplicity(k), count);
    EXPECT_EQ(acc.multiplicity({0, 0}), mult.count({0, 0}) ? mult.at({0, 0}) : 0u);
  }
}

TEST(StatsAccumulator, ExpandedFromCanonicalMatchesExpandedSolve) {
  const std::int32_t d = 20;
  const auto ds = series_values(4, d);
  StatsAccumulator from_canonical(d, ds, 8, true);
  from_canonical.add(solutions_at(d));
  StatsAccumulator direct(d, ds, 8);
  const auto expanded = solutions_at(d, true);
  direct.add(expanded);
  EXPECT_EQ(from_canonical.solution_count(), expanded.size());
  for (const auto kind :
       {DomainShape::Kind::square, DomainShape::Kind::circle, DomainShape::Kind::ring}) {
    const auto a = from_canonical.series(kind);
    const auto b = direct.series(kind);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].count, b[i].count);
  }
  EXPECT_EQ(from_canonical.histogram().bins, direct.histogram().bins);
  EXPECT_EQ(from_canonical.multiplicity({5, 5}), direct.multiplicity({5, 5}));
}

TEST(StatsAccumulator, Rejects) {
  EXPECT_THROW(StatsAccumulator(0, {}), std::invalid_argument);
  StatsAccumulator acc(5, {5});
  EXPECT_THROW(acc.multiplicity({6, 0}), std::out_of_range);
  EXPECT_THROW(acc.add(make_quad({5, 5}, {1, -7}, {5, -5}, {1, 3})), std::out_of_range);
}

TEST(SeriesValues, Steps) {
  EXPECT_EQ(series_values(50, 200), (std::vector<std::int64_t>{50, 100, 150, 200}));
  EXPECT_EQ(series_values(50, 120), (std::vector<std::int64_t>{50, 100}));
  EXPECT_THROW(series_values(0, 10), std::invalid_argument);
}

TEST(Fits, ExactPowerAndLine) {
  std::vector<SeriesPoint> cubic;
  std::vector<SeriesPoint> line;
  for (std::int64_t d = 10; d <= 100; d += 10) {
    cubic.push_back({d, static_cast<std::uint64_t>(d * d * d)});
    line.push_back({d, static_cast<std::uint64_t>(3 * d + 7)});
  }
  cubic.push_back({5, 0});  // skipped
  const auto p = fit_power_law(cubic);
  EXPECT_NEAR(p.exponent, 3.0, 1e-9);
  EXPECT_NEAR(p.r_squared, 1.0, 1e-9);
  const auto l = fit_linear(line);
  EXPECT_NEAR(l.slope, 3.0, 1e-9);
  EXPECT_NEAR(l.intercept, 7.0, 1e-9);
  EXPECT_NEAR(l.r_squared, 1.0, 1e-9);
  EXPECT_EQ(fit_power_law({}).exponent, 0.0);
}

}  // namespace
}  // namespace resonance
