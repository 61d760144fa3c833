#include "resonance/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace resonance {

ClassCatalog::ClassCatalog(std::int32_t domain_limit, std::vector<ClassRecord> records)
    : domain_limit_(domain_limit), records_(std::move(records)) {}

const ClassRecord* ClassCatalog::find(std::int64_t q) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), q,
                             [](const ClassRecord& r, std::int64_t v) { return r.q < v; });
  return it != records_.end() && it->q == q ? &*it : nullptr;
}

std::size_t ClassCatalog::weight_count() const {
  std::size_t total = 0;
  for (const auto& r : records_) total += r.weights.size();
  return total;
}

std::size_t ClassCatalog::vector_count() const {
  std::size_t total = 0;
  for (const auto& r : records_) {
    for (const auto& w : r.weights) total += w.vectors.size();
  }
  return total;
}

ClassCatalog build_class_catalog(std::int32_t domain_limit) {
  if (domain_limit < 1) {
    throw std::invalid_argument("build_class_catalog: domain limit must be >= 1, got " +
                                std::to_string(domain_limit));
  }
  const std::int64_t max_norm = 2 * std::int64_t{domain_limit} * domain_limit;

  // Split every norm once; many nodes share a norm.
  std::vector<NormSplit> split(static_cast<std::size_t>(max_norm) + 1);
  std::vector<bool> seen(split.size(), false);
  for (std::int32_t m = 0; m <= domain_limit; ++m) {
    for (std::int32_t n = 0; n <= domain_limit; ++n) {
      const auto s = WaveVector{m, n}.norm();
      if (s != 0) seen[static_cast<std::size_t>(s)] = true;
    }
  }
  for (std::int64_t s = 1; s <= max_norm; ++s) {
    if (seen[static_cast<std::size_t>(s)]) split[static_cast<std::size_t>(s)] = split_fourth_power(s);
  }

  struct Node {
    std::int64_t q;
    std::int64_t gamma;
    WaveVector k;
    bool operator<(const Node& o) const {
      if (q != o.q) return q < o.q;
      if (gamma != o.gamma) return gamma < o.gamma;
      return k < o.k;
    }
  };
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(domain_limit + 1) * (domain_limit + 1) - 1);
  for (std::int32_t m = 0; m <= domain_limit; ++m) {
    for (std::int32_t n = 0; n <= domain_limit; ++n) {
      const WaveVector k{m, n};
      if (k.is_zero()) continue;
      const auto& sp = split[static_cast<std::size_t>(k.norm())];
      nodes.push_back({sp.q, sp.gamma, k});
    }
  }
  std::sort(nodes.begin(), nodes.end());

  std::vector<ClassRecord> records;
  for (const auto& node : nodes) {
    if (records.empty() || records.back().q != node.q) records.push_back({node.q, {}});
    auto& weights = records.back().weights;
    if (weights.empty() || weights.back().gamma != node.gamma) weights.push_back({node.gamma, {}});
    weights.back().vectors.push_back(node.k);
  }
  return ClassCatalog(domain_limit, std::move(records));
}

std::size_t sieve_candidate_count(std::int32_t domain_limit) {
  if (domain_limit < 1) throw std::invalid_argument("sieve_candidate_count: domain limit must be >= 1");
  const auto max_norm = static_cast<std::size_t>(2 * std::int64_t{domain_limit} * domain_limit);

  // Fourth-power-free part of every s by dividing out d^4 multiples.
  std::vector<std::uint32_t> part(max_norm + 1);
  for (std::size_t s = 0; s <= max_norm; ++s) part[s] = static_cast<std::uint32_t>(s);
  for (std::size_t d = 2; d * d * d * d <= max_norm; ++d) {
    const auto p = d * d * d * d;
    for (std::size_t s = p; s <= max_norm; s += p) {
      while (part[s] % p == 0) part[s] /= static_cast<std::uint32_t>(p);
    }
  }

  std::vector<bool> hit(max_norm + 1, false);
  for (std::size_t a = 0; a * a <= max_norm; ++a) {
    for (std::size_t b = a; a * a + b * b <= max_norm; ++b) {
      const auto s = a * a + b * b;
      if (s != 0) hit[part[s]] = true;
    }
  }
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
}

NormSplit class_of(WaveVector k) {
  if (k.is_zero()) throw std::invalid_argument("class_of: the zero vector has no class");
  return split_fourth_power(k.norm());
}

std::vector<std::int64_t> admissible_weights(std::int64_t q, std::int32_t domain_limit) {
  std::vector<std::int64_t> out;
  if (q < 1 || domain_limit < 1) return out;
  const std::int64_t max_norm = 2 * std::int64_t{domain_limit} * domain_limit;
  for (std::int64_t g = 1; g * g * g * g * q <= max_norm; ++g) {
    const std::int64_t s = g * g * g * g * q;
    for (auto [a, b] : unsigned_decompositions(s)) {
      if (b <= domain_limit) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

}  // namespace resonance
