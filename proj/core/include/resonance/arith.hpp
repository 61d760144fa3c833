#pragma once

#include <cstdint>
#include <vector>

#include "resonance/types.hpp"

namespace resonance {

/// A norm s written as gamma^4 * q with q fourth-power-free.
struct NormSplit {
  std::int64_t gamma = 1;  ///< weight
  std::int64_t q = 1;      ///< class index

  friend constexpr auto operator<=>(const NormSplit&, const NormSplit&) = default;
};

/// a^2 + b^2 with 0 <= a <= b.
struct UnsignedDecomposition {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend constexpr auto operator<=>(const UnsignedDecomposition&,
                                    const UnsignedDecomposition&) = default;
};

/// floor(sqrt(n)) computed exactly for n >= 0.
std::int64_t isqrt(std::int64_t n);

/// Splits s into its weight and fourth-power-free class index.
/// Throws std::invalid_argument for s < 1.
NormSplit split_fourth_power(std::int64_t s);

/// True iff n = a^2 + b^2 has an integer solution.
bool is_two_square_representable(std::int64_t n);

/// All (a, b) with 0 <= a <= b and a^2 + b^2 = n, ascending in a.
std::vector<UnsignedDecomposition> unsigned_decompositions(std::int64_t n);

/// Every integer vector of norm n, sorted, without duplicates.
std::vector<WaveVector> signed_representations(std::int64_t n);

}  // namespace resonance
