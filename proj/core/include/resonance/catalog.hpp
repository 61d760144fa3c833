#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "resonance/arith.hpp"
#include "resonance/types.hpp"

namespace resonance {

/// The in-domain vectors of one class at one weight. Vectors lie in the
/// closed first quadrant, 0 <= m, n <= D, sorted ascending.
struct WeightVectors {
  std::int64_t gamma = 1;
  std::vector<WaveVector> vectors;

  std::int64_t norm(std::int64_t q) const { return gamma * gamma * gamma * gamma * q; }
};

/// All weights of a class that are realized inside the domain, ascending in gamma.
struct ClassRecord {
  std::int64_t q = 0;
  std::vector<WeightVectors> weights;
};

/// Classes realized by some nonzero (m, n) with 0 <= m, n <= D, ascending in q.
class ClassCatalog {
 public:
  ClassCatalog(std::int32_t domain_limit, std::vector<ClassRecord> records);

  std::int32_t domain_limit() const { return domain_limit_; }
  std::span<const ClassRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  /// Nullptr if q is not realized in the domain.
  const ClassRecord* find(std::int64_t q) const;

  std::size_t weight_count() const;
  std::size_t vector_count() const;

 private:
  std::int32_t domain_limit_;
  std::vector<ClassRecord> records_;
};

/// Groups every nonzero first-quadrant node of [0, D]^2 by its class.
/// Throws std::invalid_argument for D < 1.
ClassCatalog build_class_catalog(std::int32_t domain_limit);

/// Number of distinct fourth-power-free parts of norms s <= 2 D^2 that are sums
/// of two squares, ignoring the coordinate bound. This is the candidate pool a
/// norm sieve produces before dropping classes with no vector in [0, D]^2.
std::size_t sieve_candidate_count(std::int32_t domain_limit);

/// (q, gamma) of a nonzero wave vector. Throws std::invalid_argument for (0,0).
NormSplit class_of(WaveVector k);

/// Weights gamma for which gamma^4 q = m^2 + n^2 has a solution with
/// 0 <= m, n <= D.
std::vector<std::int64_t> admissible_weights(std::int64_t q, std::int32_t domain_limit);

}  // namespace resonance
