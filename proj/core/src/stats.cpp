#include "resonance/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <iterator>
#include <stdexcept>

#include "resonance/quad.hpp"

namespace resonance {

bool DomainShape::contains(WaveVector k) const {
  switch (kind) {
    case Kind::square:
      return std::abs(k.m) <= outer && std::abs(k.n) <= outer;
    case Kind::circle:
      return k.norm() <= outer * outer;
    case Kind::ring: {
      const auto s = k.norm();
      return (inner < 0 || s > inner * inner) && s <= outer * outer;
    }
  }
  return false;
}

bool DomainShape::contains(const ResonantQuad& quad) const {
  return contains(quad.k1) && contains(quad.k2) && contains(quad.k3) && contains(quad.k4);
}

const char* to_string(DomainShape::Kind kind) {
  switch (kind) {
    case DomainShape::Kind::square: return "square";
    case DomainShape::Kind::circle: return "circle";
    case DomainShape::Kind::ring: return "ring";
  }
  return "?";
}

std::uint64_t MultiplicityHistogram::mass() const {
  std::uint64_t total = 0;
  for (const auto& [mult, count] : bins) total += mult * count;
  return total;
}

std::vector<ResonantQuad> filter_domain(std::span<const ResonantQuad> solutions,
                                        const DomainShape& shape) {
  std::vector<ResonantQuad> out;
  std::copy_if(solutions.begin(), solutions.end(), std::back_inserter(out),
               [&](const ResonantQuad& q) { return shape.contains(q); });
  return out;
}

std::vector<SeriesPoint> domain_series(std::span<const ResonantQuad> solutions,
                                       std::span<const std::int64_t> ds, DomainShape::Kind kind,
                                       std::int64_t ring_width) {
  std::vector<SeriesPoint> out;
  for (const auto d : ds) {
    const DomainShape shape = kind == DomainShape::Kind::ring ? DomainShape::ring(d - ring_width, d)
                                                              : DomainShape{kind, 0, d};
    const auto count = std::count_if(solutions.begin(), solutions.end(),
                                     [&](const ResonantQuad& q) { return shape.contains(q); });
    out.push_back({d, static_cast<std::uint64_t>(count)});
  }
  return out;
}

std::unordered_map<WaveVector, std::uint64_t> vector_multiplicities(
    std::span<const ResonantQuad> solutions) {
  std::unordered_map<WaveVector, std::uint64_t> out;
  for (const auto& q : solutions) {
    for (const auto& k : {q.k1, q.k2, q.k3, q.k4}) ++out[k];
  }
  return out;
}

MultiplicityHistogram multiplicity_histogram(std::span<const ResonantQuad> solutions) {
  MultiplicityHistogram h;
  for (const auto& [k, mult] : vector_multiplicities(solutions)) ++h.bins[mult];
  return h;
}

std::vector<std::int64_t> series_values(std::int64_t step, std::int64_t max_d) {
  if (step < 1) throw std::invalid_argument("series_values: step must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t d = step; d <= max_d; d += step) out.push_back(d);
  return out;
}

StatsAccumulator::StatsAccumulator(std::int32_t domain_limit, std::vector<std::int64_t> ds,
                                   std::int64_t ring_width, bool expand_reflections)
    : domain_limit_(domain_limit),
      ds_(std::move(ds)),
      ring_width_(ring_width),
      expand_(expand_reflections) {
  if (domain_limit < 1) throw std::invalid_argument("StatsAccumulator: domain limit must be >= 1");
  std::sort(ds_.begin(), ds_.end());
  ds_.erase(std::unique(ds_.begin(), ds_.end()), ds_.end());
  square_.assign(ds_.size() + 1, 0);
  circle_.assign(ds_.size() + 1, 0);
  ring_.assign(ds_.size(), 0);
  const auto side = static_cast<std::size_t>(2 * domain_limit + 1);
  multiplicity_.assign(side * side, 0);
}

std::size_t StatsAccumulator::cell(WaveVector k) const {
  if (std::abs(k.m) > domain_limit_ || std::abs(k.n) > domain_limit_) {
    throw std::out_of_range("StatsAccumulator: vector outside the domain");
  }
  const auto side = static_cast<std::size_t>(2 * domain_limit_ + 1);
  return static_cast<std::size_t>(k.m + domain_limit_) * side +
         static_cast<std::size_t>(k.n + domain_limit_);
}

void StatsAccumulator::add(const ResonantQuad& quad) {
  const std::array<WaveVector, 4> ks{quad.k1, quad.k2, quad.k3, quad.k4};
  std::int64_t max_abs = 0;
  std::int64_t max_norm = 0;
  std::int64_t min_norm = ks[0].norm();
  for (const auto& k : ks) {
    max_abs = std::max<std::int64_t>({max_abs, std::abs(k.m), std::abs(k.n)});
    max_norm = std::max(max_norm, k.norm());
    min_norm = std::min(min_norm, k.norm());
    cell(k);  // range check before any counter moves
  }

  // Reflections that map the quad to itself or to its side swap add nothing.
  std::uint64_t images = 0;
  std::array<ResonantQuad, 4> seen;
  for (const int r : {0, 1, 2, 3}) {
    const auto image = r == 0 ? quad : reflect(quad, r & 1, r & 2);
    const auto swapped = swap_sides(image);
    const auto end = seen.begin() + static_cast<std::ptrdiff_t>(images);
    if (std::find_if(seen.begin(), end, [&](const ResonantQuad& s) {
          return s == image || s == swapped;
        }) != end) {
      continue;
    }
    seen[images++] = image;
    for (const auto& k : {image.k1, image.k2, image.k3, image.k4}) ++multiplicity_[cell(k)];
    if (!expand_) break;
  }
  solutions_ += images;

  // Domain shapes are reflection invariant. Counts are binned at the smallest
  // D that holds the quad and summed later.
  const auto sq = std::lower_bound(ds_.begin(), ds_.end(), max_abs) - ds_.begin();
  square_[static_cast<std::size_t>(sq)] += images;
  auto ci = std::partition_point(ds_.begin(), ds_.end(),
                                 [&](std::int64_t d) { return d * d < max_norm; });
  circle_[static_cast<std::size_t>(ci - ds_.begin())] += images;
  for (; ci != ds_.end(); ++ci) {
    const std::int64_t r_in = *ci - ring_width_;
    if (r_in >= 0 && min_norm <= r_in * r_in) break;
    ring_[static_cast<std::size_t>(ci - ds_.begin())] += images;
  }
}

std::vector<SeriesPoint> StatsAccumulator::series(DomainShape::Kind kind) const {
  std::vector<SeriesPoint> out;
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < ds_.size(); ++i) {
    switch (kind) {
      case DomainShape::Kind::square: running += square_[i]; break;
      case DomainShape::Kind::circle: running += circle_[i]; break;
      case DomainShape::Kind::ring: running = ring_[i]; break;
    }
    out.push_back({ds_[i], running});
  }
  return out;
}

MultiplicityHistogram StatsAccumulator::histogram() const {
  MultiplicityHistogram h;
  for (const auto m : multiplicity_) {
    if (m != 0) ++h.bins[m];
  }
  return h;
}

std::uint64_t StatsAccumulator::multiplicity(WaveVector k) const { return multiplicity_[cell(k)]; }

PowerFit fit_power_law(std::span<const SeriesPoint> series) {
  std::vector<SeriesPoint> positive;
  for (const auto& p : series) {
    if (p.count > 0 && p.d > 0) positive.push_back(p);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const auto n = static_cast<double>(positive.size());
  if (positive.size() < 2) return {};
  for (const auto& p : positive) {
    const double x = std::log(static_cast<double>(p.d));
    const double y = std::log(static_cast<double>(p.count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double cov = sxy - sx * sy / n;
  const double vx = sxx - sx * sx / n;
  const double vy = syy - sy * sy / n;
  PowerFit fit;
  fit.exponent = cov / vx;
  fit.r_squared = vy > 0 ? cov * cov / (vx * vy) : 1.0;
  return fit;
}

LinearFit fit_linear(std::span<const SeriesPoint> series) {
  if (series.size() < 2) return {};
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const auto n = static_cast<double>(series.size());
  for (const auto& p : series) {
    const auto x = static_cast<double>(p.d);
    const auto y = static_cast<double>(p.count);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double cov = sxy - sx * sy / n;
  const double vx = sxx - sx * sx / n;
  const double vy = syy - sy * sy / n;
  LinearFit fit;
  fit.slope = cov / vx;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.r_squared = vy > 0 ? cov * cov / (vx * vy) : 1.0;
  return fit;
}

}  // namespace resonance
