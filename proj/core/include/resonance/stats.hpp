#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "resonance/types.hpp"

namespace resonance {

/// Partial domain a solution must lie in entirely.
struct DomainShape {
  enum class Kind { square, circle, ring };

  Kind kind = Kind::square;
  std::int64_t inner = 0;  ///< ring only: exclusive lower radius
  std::int64_t outer = 0;  ///< D for squares and circles, outer radius for rings

  static DomainShape square(std::int64_t d) { return {Kind::square, 0, d}; }
  static DomainShape circle(std::int64_t d) { return {Kind::circle, 0, d}; }
  static DomainShape ring(std::int64_t r_in, std::int64_t r_out) { return {Kind::ring, r_in, r_out}; }

  bool contains(WaveVector k) const;
  bool contains(const ResonantQuad& quad) const;
};

const char* to_string(DomainShape::Kind kind);

struct SeriesPoint {
  std::int64_t d = 0;
  std::uint64_t count = 0;
};

/// Vector multiplicity -> number of distinct vectors with that multiplicity.
struct MultiplicityHistogram {
  std::map<std::uint64_t, std::uint64_t> bins;

  /// Sum of multiplicity * vector count; four times the solution count.
  std::uint64_t mass() const;
};

std::vector<ResonantQuad> filter_domain(std::span<const ResonantQuad> solutions,
                                        const DomainShape& shape);

/// Solution counts in the partial domains of the given kind for each D. Rings
/// are (D - ring_width, D].
std::vector<SeriesPoint> domain_series(std::span<const ResonantQuad> solutions,
                                       std::span<const std::int64_t> ds, DomainShape::Kind kind,
                                       std::int64_t ring_width = 50);

/// Number of solutions each vector takes part in. A vector occupying two
/// slots of one solution counts twice.
std::unordered_map<WaveVector, std::uint64_t> vector_multiplicities(
    std::span<const ResonantQuad> solutions);

MultiplicityHistogram multiplicity_histogram(std::span<const ResonantQuad> solutions);

/// D = step, 2 step, ..., up to and including max_d when it is a multiple.
std::vector<std::int64_t> series_values(std::int64_t step, std::int64_t max_d);

/// Streaming aggregation of the same statistics, for solution sets too large
/// to hold in memory. Memory is O(D^2) independent of the solution count.
class StatsAccumulator {
 public:
  /// With `expand_reflections`, every added quad stands for its distinct axis
  /// reflections (up to side swap), so feeding canonical output yields the
  /// statistics of the sign-expanded solution set.
  StatsAccumulator(std::int32_t domain_limit, std::vector<std::int64_t> ds,
                   std::int64_t ring_width = 50, bool expand_reflections = false);

  void add(const ResonantQuad& quad);
  void add(std::span<const ResonantQuad> batch) {
    for (const auto& q : batch) add(q);
  }

  std::uint64_t solution_count() const { return solutions_; }
  std::vector<SeriesPoint> series(DomainShape::Kind kind) const;
  MultiplicityHistogram histogram() const;
  /// Throws std::out_of_range outside the domain.
  std::uint64_t multiplicity(WaveVector k) const;
  std::int64_t ring_width() const { return ring_width_; }
  bool expand_reflections() const { return expand_; }

 private:
  std::size_t cell(WaveVector k) const;

  std::int32_t domain_limit_;
  std::vector<std::int64_t> ds_;
  std::int64_t ring_width_;
  bool expand_;
  std::uint64_t solutions_ = 0;
  std::vector<std::uint64_t> square_;
  std::vector<std::uint64_t> circle_;
  std::vector<std::uint64_t> ring_;
  std::vector<std::uint32_t> multiplicity_;
};

struct PowerFit {
  double exponent = 0.0;  ///< slope of log(count) against log(D)
  double r_squared = 0.0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least squares on (log D, log count); points with zero count are skipped.
PowerFit fit_power_law(std::span<const SeriesPoint> series);

LinearFit fit_linear(std::span<const SeriesPoint> series);

}  // namespace resonance
