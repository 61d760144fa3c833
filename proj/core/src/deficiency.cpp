#include "resonance/deficiency.hpp"

#include <algorithm>
#include <stdexcept>

#include "resonance/arith.hpp"

namespace resonance {

NormalizedPair normalize_delta(WaveVector u, WaveVector v) {
  if (u == v) throw std::invalid_argument("normalize_delta: identical vectors");
  if (u.norm() != v.norm()) throw std::invalid_argument("normalize_delta: norm mismatch");
  if (u.m < v.m) {
    u.m = -u.m;
    v.m = -v.m;
  }
  if (u.n < v.n) {
    u.n = -u.n;
    v.n = -v.n;
  }
  return {{u.m - v.m, u.n - v.n}, u, v};
}

std::vector<WaveVector> expand_quadrants(std::span<const WaveVector> first_quadrant) {
  std::vector<WaveVector> out;
  out.reserve(first_quadrant.size() * 4);
  for (const auto& k : first_quadrant) {
    out.push_back(k);
    if (k.m != 0) out.push_back({-k.m, k.n});
    if (k.n != 0) out.push_back({k.m, -k.n});
    if (k.m != 0 && k.n != 0) out.push_back({-k.m, -k.n});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void sort_unique(std::vector<DeficiencyPoint>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

}  // namespace

std::vector<DeficiencyPoint> gamma_deficiency_set(std::int64_t q, std::int64_t gamma,
                                                  std::int32_t domain_limit,
                                                  DeficiencyMode mode) {
  std::vector<WaveVector> in_domain;
  for (const auto& k : signed_representations(gamma * gamma * gamma * gamma * q)) {
    if (std::abs(k.m) <= domain_limit && std::abs(k.n) <= domain_limit) in_domain.push_back(k);
  }
  std::vector<DeficiencyPoint> out;
  for_each_oriented_pair(in_domain, mode, [&](WaveVector u, WaveVector v) {
    out.push_back({u.m - v.m, u.n - v.n});
  });
  sort_unique(out);
  return out;
}

std::vector<DeficiencyPoint> deficiency_set(const ClassRecord& record, DeficiencyMode mode) {
  std::vector<DeficiencyPoint> out;
  for_each_half(record, mode, [&](const HalfPair& h) { out.push_back(h.delta); });
  sort_unique(out);
  return out;
}

std::vector<HalfPair> half_pairs(const ClassRecord& record, DeficiencyMode mode) {
  std::vector<HalfPair> out;
  for_each_half(record, mode, [&](const HalfPair& h) { out.push_back(h); });
  return out;
}

}  // namespace resonance
