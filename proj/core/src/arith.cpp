#include "resonance/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace resonance {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  // Compare by division so r near 2^31.5 cannot overflow.
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

NormSplit split_fourth_power(std::int64_t s) {
  if (s < 1) {
    throw std::invalid_argument("split_fourth_power: norm must be positive, got " +
                                std::to_string(s));
  }
  NormSplit out{1, s};
  // Composite d never divides here: its prime factors' fourth powers are gone.
  for (std::int64_t d = 2; d * d * d * d <= out.q; ++d) {
    const std::int64_t d4 = d * d * d * d;
    while (out.q % d4 == 0) {
      out.q /= d4;
      out.gamma *= d;
    }
  }
  return out;
}

bool is_two_square_representable(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("is_two_square_representable: negative input");
  if (n == 0) return true;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (p % 4 == 3 && e % 2 == 1) return false;
  }
  // leftover n is 1 or a prime
  return n % 4 != 3;
}

std::vector<UnsignedDecomposition> unsigned_decompositions(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("unsigned_decompositions: n must be positive");
  std::vector<UnsignedDecomposition> out;
  for (std::int64_t a = 0; 2 * a * a <= n; ++a) {
    const std::int64_t rest = n - a * a;
    const std::int64_t b = isqrt(rest);
    if (b * b == rest) out.push_back({a, b});
  }
  return out;
}

std::vector<WaveVector> signed_representations(std::int64_t n) {
  std::vector<WaveVector> out;
  for (auto [a, b] : unsigned_decompositions(n)) {
    const auto ia = static_cast<std::int32_t>(a);
    const auto ib = static_cast<std::int32_t>(b);
    for (std::int32_t sa : {1, -1}) {
      for (std::int32_t sb : {1, -1}) {
        out.push_back({sa * ia, sb * ib});
        out.push_back({sb * ib, sa * ia});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace resonance
