#include "resonance/quad.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "resonance/catalog.hpp"

namespace resonance {

std::ostream& operator<<(std::ostream& os, const ResonantQuad& quad) {
  return os << '[' << quad.k1 << ' ' << quad.k2 << " | " << quad.k3 << ' ' << quad.k4
            << " q=" << quad.q1 << '/' << quad.g1 << ',' << quad.q2 << '/' << quad.g2 << ']';
}

ResonantQuad make_quad(WaveVector k1, WaveVector k2, WaveVector k3, WaveVector k4) {
  const auto c1 = class_of(k1);
  const auto c2 = class_of(k2);
  return {k1, k2, k3, k4, c1.q, c1.gamma, c2.q, c2.gamma};
}

std::optional<std::string> quad_violation(const ResonantQuad& quad) {
  if (quad.k1.is_zero() || quad.k2.is_zero() || quad.k3.is_zero() || quad.k4.is_zero()) {
    return "zero vector";
  }
  if (quad.k1 + quad.k2 != quad.k3 + quad.k4) return "momentum mismatch";
  const NormSplit s1{quad.g1, quad.q1};
  const NormSplit s2{quad.g2, quad.q2};
  if (class_of(quad.k1) != s1 || class_of(quad.k3) != s1) return "k1/k3 class mismatch";
  if (class_of(quad.k2) != s2 || class_of(quad.k4) != s2) return "k2/k4 class mismatch";
  if (quad.q1 == quad.q2) return "single class";
  // With one class per slot pair, triviality reduces to k1 == k3.
  if (quad.k1 == quad.k3) return "trivial";
  return std::nullopt;
}

ResonantQuad swap_sides(const ResonantQuad& quad) {
  ResonantQuad out = quad;
  out.k1 = quad.k3;
  out.k2 = quad.k4;
  out.k3 = quad.k1;
  out.k4 = quad.k2;
  return out;
}

ResonantQuad reflect(const ResonantQuad& quad, bool flip_m, bool flip_n) {
  auto f = [&](WaveVector k) {
    return WaveVector{flip_m ? -k.m : k.m, flip_n ? -k.n : k.n};
  };
  ResonantQuad out = quad;
  out.k1 = f(quad.k1);
  out.k2 = f(quad.k2);
  out.k3 = f(quad.k3);
  out.k4 = f(quad.k4);
  return out;
}

ResonantQuad canonical_representative(const ResonantQuad& quad, bool expand_signs) {
  ResonantQuad base = quad;
  if (base.q1 > base.q2) {
    base = {quad.k2, quad.k1, quad.k4, quad.k3, quad.q2, quad.g2, quad.q1, quad.g1};
  }
  ResonantQuad best = base;
  for (int swap = 0; swap < 2; ++swap) {
    const ResonantQuad sided = swap ? swap_sides(base) : base;
    for (int r = 0; r < (expand_signs ? 1 : 4); ++r) {
      const ResonantQuad img = reflect(sided, r & 1, r & 2);
      if (img < best) best = img;
    }
  }
  return best;
}

ResonantQuad canonicalize(const ResonantQuad& quad, bool expand_signs) {
  if (auto why = quad_violation(quad)) {
    std::ostringstream os;
    os << "canonicalize: invalid quad " << quad << ": " << *why;
    throw std::invalid_argument(os.str());
  }
  return canonical_representative(quad, expand_signs);
}

std::int32_t max_abs_coordinate(const ResonantQuad& quad) {
  std::int32_t out = 0;
  for (const auto& k : {quad.k1, quad.k2, quad.k3, quad.k4}) {
    out = std::max({out, std::abs(k.m), std::abs(k.n)});
  }
  return out;
}

}  // namespace resonance
