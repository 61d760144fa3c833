#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "resonance/catalog.hpp"
#include "resonance/types.hpp"

namespace resonance {

/// One class's ordered pair of same-norm vectors, oriented so that
/// u - v == delta with both delta coordinates nonnegative.
struct HalfPair {
  std::int64_t q = 0;
  std::int64_t gamma = 0;
  WaveVector u;
  WaveVector v;
  DeficiencyPoint delta;

  friend constexpr auto operator<=>(const HalfPair&, const HalfPair&) = default;
};

struct NormalizedPair {
  DeficiencyPoint delta;
  WaveVector u;
  WaveVector v;
};

/// Flips the axes on which u - v is negative, identically for both vectors.
/// Throws std::invalid_argument if u == v or |u| != |v|.
NormalizedPair normalize_delta(WaveVector u, WaveVector v);

/// First-quadrant vectors expanded over all sign variants, sorted, deduplicated.
std::vector<WaveVector> expand_quadrants(std::span<const WaveVector> first_quadrant);

/// True if the pair may contribute under `mode`. paper_compat rejects pairs
/// that are sign variants of one ordered unsigned decomposition.
inline bool pair_admitted(WaveVector u, WaveVector v, DeficiencyMode mode) {
  if (mode == DeficiencyMode::complete) return true;
  return std::abs(u.m) != std::abs(v.m) || std::abs(u.n) != std::abs(v.n);
}

/// Calls fn(u, v) for every oriented pair of distinct vectors of `signed_vectors`
/// admitted under `mode`, i.e. the normalized image of every unordered pair,
/// each exactly once. The set of signed vectors must be closed under axis
/// reflections.
template <typename Fn>
void for_each_oriented_pair(std::span<const WaveVector> signed_vectors, DeficiencyMode mode,
                            Fn&& fn) {
  for (const auto& u : signed_vectors) {
    for (const auto& v : signed_vectors) {
      if (u.m < v.m || u.n < v.n || u == v) continue;
      if (!pair_admitted(u, v, mode)) continue;
      fn(u, v);
    }
  }
}

/// Calls fn(HalfPair) for every half pair of the record, weight by weight.
template <typename Fn>
void for_each_half(const ClassRecord& record, DeficiencyMode mode, Fn&& fn) {
  for (const auto& w : record.weights) {
    const auto signed_vectors = expand_quadrants(w.vectors);
    for_each_oriented_pair(signed_vectors, mode, [&](WaveVector u, WaveVector v) {
      fn(HalfPair{record.q, w.gamma, u, v, DeficiencyPoint{u.m - v.m, u.n - v.n}});
    });
  }
}

/// Deficiency points of one weight of class q inside |m|, |n| <= D, sorted.
std::vector<DeficiencyPoint> gamma_deficiency_set(std::int64_t q, std::int64_t gamma,
                                                  std::int32_t domain_limit,
                                                  DeficiencyMode mode);

/// Union of the record's gamma-deficiency sets, sorted and deduplicated.
std::vector<DeficiencyPoint> deficiency_set(const ClassRecord& record, DeficiencyMode mode);

/// Every half pair of the record. Halves of different weights sharing a
/// point are all kept.
std::vector<HalfPair> half_pairs(const ClassRecord& record, DeficiencyMode mode);

}  // namespace resonance
