#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace resonance {

/// Integer lattice node (m, n) standing for a wave vector.
struct WaveVector {
  std::int32_t m = 0;
  std::int32_t n = 0;

  constexpr std::int64_t norm() const {
    return std::int64_t{m} * m + std::int64_t{n} * n;
  }
  constexpr bool is_zero() const { return m == 0 && n == 0; }

  friend constexpr WaveVector operator+(WaveVector a, WaveVector b) {
    return {a.m + b.m, a.n + b.n};
  }
  friend constexpr WaveVector operator-(WaveVector a, WaveVector b) {
    return {a.m - b.m, a.n - b.n};
  }
  friend constexpr WaveVector operator-(WaveVector a) { return {-a.m, -a.n}; }
  friend constexpr auto operator<=>(const WaveVector&, const WaveVector&) = default;
};

inline std::ostream& operator<<(std::ostream& os, WaveVector k) {
  return os << '(' << k.m << ',' << k.n << ')';
}

/// Normalized difference of two same-norm vectors; both coordinates are >= 0
/// and the origin never occurs.
struct DeficiencyPoint {
  std::int32_t dm = 0;
  std::int32_t dn = 0;

  friend constexpr auto operator<=>(const DeficiencyPoint&, const DeficiencyPoint&) = default;
};

inline std::ostream& operator<<(std::ostream& os, DeficiencyPoint d) {
  return os << '(' << d.dm << ',' << d.dn << ')';
}

/// Which vector pairs of a class contribute deficiency points.
///
/// `paper_compat` pairs only distinct ordered unsigned decompositions, so a
/// representation is never paired with its own sign variants. `complete`
/// pairs every two distinct signed representations.
enum class DeficiencyMode { paper_compat, complete };

constexpr const char* to_string(DeficiencyMode mode) {
  return mode == DeficiencyMode::complete ? "complete" : "paper-compat";
}

/// A two-class solution k1 + k2 = k3 + k4 with k1, k3 in class (q1, g1) and
/// k2, k4 in class (q2, g2).
struct ResonantQuad {
  WaveVector k1, k2, k3, k4;
  std::int64_t q1 = 0;
  std::int64_t g1 = 0;
  std::int64_t q2 = 0;
  std::int64_t g2 = 0;

  friend constexpr auto operator<=>(const ResonantQuad&, const ResonantQuad&) = default;
};

std::ostream& operator<<(std::ostream& os, const ResonantQuad& quad);

}  // namespace resonance

template <>
struct std::hash<resonance::WaveVector> {
  std::size_t operator()(resonance::WaveVector k) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t(std::uint32_t(k.m)) << 32) |
                                      std::uint32_t(k.n));
  }
};
