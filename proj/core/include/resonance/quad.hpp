#pragma once

#include <optional>
#include <string>

#include "resonance/types.hpp"

namespace resonance {

/// Builds a quad from four vectors, filling the class fields from k1 and k2.
/// Throws std::invalid_argument if k1 or k2 is zero.
ResonantQuad make_quad(WaveVector k1, WaveVector k2, WaveVector k3, WaveVector k4);

/// Describes the first violated invariant, or nullopt if the quad is a valid
/// nontrivial two-class solution (momentum, per-slot classes, q1 != q2).
std::optional<std::string> quad_violation(const ResonantQuad& quad);

/// (k3, k4, k1, k2).
ResonantQuad swap_sides(const ResonantQuad& quad);

/// Negates the m and/or n coordinate of all four vectors.
ResonantQuad reflect(const ResonantQuad& quad, bool flip_m, bool flip_n);

/// Deterministic representative of the quad's symmetry orbit.
///
/// The orbit is generated by side swap and, unless `expand_signs` is set, the
/// four axis reflections applied to all vectors. Slots are first arranged so
/// that q1 < q2; the representative is the lexicographically smallest
/// (k1, k2, k3, k4). Throws std::invalid_argument for invalid quads.
ResonantQuad canonicalize(const ResonantQuad& quad, bool expand_signs = false);

/// canonicalize() without the invariant check, for quads known to be valid.
ResonantQuad canonical_representative(const ResonantQuad& quad, bool expand_signs);

/// Largest absolute coordinate over the four vectors.
std::int32_t max_abs_coordinate(const ResonantQuad& quad);

}  // namespace resonance
