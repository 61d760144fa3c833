#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "resonance/arith.hpp"
#include "resonance/types.hpp"

namespace resonance {

/// Largest domain the brute-force enumeration accepts; the loop is
/// O((2D+1)^6).
inline constexpr std::int32_t kOracleMaxDomain = 12;

/// Exact frequency balance from the class splits of k1..k4: for every class
/// index, the weights of k1, k2 minus the weights of k3, k4 sum to zero.
bool omega_balance(const std::array<NormSplit, 4>& splits);

/// omega_balance for four nonzero vectors. Throws std::invalid_argument on a
/// zero vector.
bool omega_balance(WaveVector k1, WaveVector k2, WaveVector k3, WaveVector k4);
bool omega_balance(const ResonantQuad& quad);

/// Every two-class solution with |m|, |n| <= D, canonicalized, sorted, unique.
/// Throws std::invalid_argument unless 1 <= D <= kOracleMaxDomain.
std::vector<ResonantQuad> brute_force(std::int32_t domain_limit, bool expand_signs = false,
                                      unsigned workers = 1);

struct OracleReport {
  std::int32_t domain_limit = 0;
  std::size_t solver_count = 0;
  std::size_t oracle_count = 0;
  std::vector<ResonantQuad> missing;  ///< in oracle output, not in solver output
  std::vector<ResonantQuad> extra;    ///< in solver output, not in oracle output

  bool matches() const { return missing.empty() && extra.empty(); }
};

/// Symmetric difference of two canonicalized solution sets (any order).
OracleReport compare(std::span<const ResonantQuad> solver_output,
                     std::span<const ResonantQuad> oracle_output, std::int32_t domain_limit = 0);

}  // namespace resonance
