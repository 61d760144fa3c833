#include "resonance/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>
#include <thread>

#include "resonance/catalog.hpp"
#include "resonance/quad.hpp"

namespace resonance {

bool omega_balance(const std::array<NormSplit, 4>& splits) {
  for (std::size_t i = 0; i < 4; ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (splits[j].q == splits[i].q) sum += j < 2 ? splits[j].gamma : -splits[j].gamma;
    }
    if (sum != 0) return false;
  }
  return true;
}

bool omega_balance(WaveVector k1, WaveVector k2, WaveVector k3, WaveVector k4) {
  return omega_balance({class_of(k1), class_of(k2), class_of(k3), class_of(k4)});
}

bool omega_balance(const ResonantQuad& quad) {
  return omega_balance(quad.k1, quad.k2, quad.k3, quad.k4);
}

std::vector<ResonantQuad> brute_force(std::int32_t domain_limit, bool expand_signs,
                                      unsigned workers) {
  if (domain_limit < 1 || domain_limit > kOracleMaxDomain) {
    throw std::invalid_argument("brute_force: domain limit must be in [1, " +
                                std::to_string(kOracleMaxDomain) + "], got " +
                                std::to_string(domain_limit));
  }
  const std::int32_t side = 2 * domain_limit + 1;
  auto index = [&](WaveVector k) {
    return static_cast<std::size_t>(k.m + domain_limit) * side + (k.n + domain_limit);
  };
  std::vector<WaveVector> box;
  std::vector<NormSplit> split(static_cast<std::size_t>(side) * side);
  for (std::int32_t m = -domain_limit; m <= domain_limit; ++m) {
    for (std::int32_t n = -domain_limit; n <= domain_limit; ++n) {
      const WaveVector k{m, n};
      if (k.is_zero()) continue;
      box.push_back(k);
      split[index(k)] = split_fourth_power(k.norm());
    }
  }

  auto scan = [&](std::size_t first, std::size_t stride, std::vector<ResonantQuad>& out) {
    for (std::size_t i1 = first; i1 < box.size(); i1 += stride) {
      const WaveVector k1 = box[i1];
      const NormSplit s1 = split[index(k1)];
      for (const WaveVector k2 : box) {
        const NormSplit s2 = split[index(k2)];
        if (s1.q == s2.q) continue;
        for (const WaveVector k3 : box) {
          const WaveVector k4 = k1 + k2 - k3;
          if (k4.is_zero() || std::abs(k4.m) > domain_limit || std::abs(k4.n) > domain_limit) {
            continue;
          }
          const NormSplit s3 = split[index(k3)];
          const NormSplit s4 = split[index(k4)];
          // Two distinct classes, one of each on either side.
          const bool right_matches = (s3.q == s1.q && s4.q == s2.q) || (s3.q == s2.q && s4.q == s1.q);
          if (!right_matches) continue;
          if (!omega_balance({s1, s2, s3, s4})) continue;
          if ((k1 == k3 && k2 == k4) || (k1 == k4 && k2 == k3)) continue;
          const bool straight = s3.q == s1.q;
          const ResonantQuad quad{k1, k2, straight ? k3 : k4, straight ? k4 : k3,
                                  s1.q, s1.gamma, s2.q, s2.gamma};
          out.push_back(canonicalize(quad, expand_signs));
        }
      }
    }
  };

  workers = std::max(1u, workers);
  std::vector<std::vector<ResonantQuad>> partial(workers);
  if (workers == 1) {
    scan(0, 1, partial[0]);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] { scan(w, workers, partial[w]); });
    }
  }
  std::vector<ResonantQuad> out;
  for (auto& p : partial) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OracleReport compare(std::span<const ResonantQuad> solver_output,
                     std::span<const ResonantQuad> oracle_output, std::int32_t domain_limit) {
  std::vector<ResonantQuad> solver(solver_output.begin(), solver_output.end());
  std::vector<ResonantQuad> oracle(oracle_output.begin(), oracle_output.end());
  std::sort(solver.begin(), solver.end());
  std::sort(oracle.begin(), oracle.end());
  OracleReport report;
  report.domain_limit = domain_limit;
  report.solver_count = solver.size();
  report.oracle_count = oracle.size();
  std::set_difference(oracle.begin(), oracle.end(), solver.begin(), solver.end(),
                      std::back_inserter(report.missing));
  std::set_difference(solver.begin(), solver.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(report.extra));
  return report;
}

}  // namespace resonance
