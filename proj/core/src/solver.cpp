#include "resonance/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "resonance/quad.hpp"

namespace resonance {

DeficiencyGrid::DeficiencyGrid(std::int32_t domain_limit)
    : domain_limit_(domain_limit), side_(2 * domain_limit + 1) {
  if (domain_limit < 1) throw std::invalid_argument("DeficiencyGrid: domain limit must be >= 1");
  cells_.assign(static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_), 0);
}

HalfStore::HalfStore(std::int32_t domain_limit) : side_(2 * domain_limit + 1) {
  if (domain_limit < 1) throw std::invalid_argument("HalfStore: domain limit must be >= 1");
  const auto cells = static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_);
  heads_.assign(cells, 0);
  tails_.assign(cells, 0);
}

void HalfStore::append(const HalfPair& half) {
  if (entries_.size() >= std::numeric_limits<Index>::max() - 1) {
    throw std::length_error("HalfStore: index space exhausted");
  }
  entries_.push_back(half);
  next_.push_back(0);
  const auto idx = static_cast<Index>(entries_.size());
  const auto c = cell(half.delta);
  if (tails_[c] == 0) {
    heads_[c] = idx;
  } else {
    next_[tails_[c] - 1] = idx;
  }
  tails_[c] = idx;
}

std::size_t HalfStore::chain_length(DeficiencyPoint p) const {
  const auto c = chain(p);
  return static_cast<std::size_t>(std::distance(c.begin(), c.end()));
}

DeficiencyGrid pass1_mark(const ClassCatalog& catalog, DeficiencyMode mode) {
  DeficiencyGrid grid(catalog.domain_limit());
  for (const auto& record : catalog.records()) {
    for (const auto& p : deficiency_set(record, mode)) grid.increment(p);
  }
  return grid;
}

SurvivorSet pass2_discard(const DeficiencyGrid& grid, const ClassCatalog& catalog,
                          DeficiencyMode mode) {
  SurvivorSet out;
  for (const auto& record : catalog.records()) {
    const auto points = deficiency_set(record, mode);
    const bool interacts =
        std::any_of(points.begin(), points.end(), [&](DeficiencyPoint p) { return grid.at(p) >= 2; });
    if (interacts) {
      out.survivors.push_back(&record);
    } else {
      ++out.discarded;
    }
  }
  return out;
}

HalfStore pass3_link(std::span<const ClassRecord* const> survivors, std::int32_t domain_limit,
                     DeficiencyMode mode) {
  HalfStore store(domain_limit);
  for (const auto* record : survivors) {
    for_each_half(*record, mode, [&](const HalfPair& h) { store.append(h); });
  }
  return store;
}

std::vector<GatheredPoint> pass4_gather(const DeficiencyGrid& grid, const HalfStore& store) {
  std::vector<GatheredPoint> out;
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    const auto p = grid.point(i);
    if (grid.at(p) >= 2) out.push_back({p, store.head(p)});
  }
  return out;
}

namespace {

__extension__ using PackedKey = unsigned __int128;

constexpr std::int32_t kMaxPackedCoordinate = 32767;

// 32-bit code of a vector whose unsigned order is the lexicographic order
// of (m, n).
std::uint32_t code(WaveVector k) {
  return (std::uint32_t(std::uint16_t(k.m + 32768)) << 16) | std::uint16_t(k.n + 32768);
}

WaveVector decode(std::uint32_t c) {
  return {std::int32_t(c >> 16) - 32768, std::int32_t(c & 0xffff) - 32768};
}

PackedKey join(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  return (PackedKey(a) << 96) | (PackedKey(b) << 64) | (PackedKey(c) << 32) | PackedKey(d);
}

WaveVector reflected(WaveVector k, int r) {
  return {(r & 1) ? -k.m : k.m, (r & 2) ? -k.n : k.n};
}

// Orbit element g = (reflection r, side swap) acts on a solution's halves
// h = (u, v) as h -> (r u, r v) without swap and h -> (r v, r u) with swap,
// identically for both halves. The quad built from halves a (lower q) and b
// is (a.u, b.v, a.v, b.u).
struct Image {
  int reflection;
  bool swap;
};

// Half prepared for pairing at one deficiency point.
struct PreparedHalf {
  std::int64_t q;
  std::int64_t gamma;
  // codes[r][0] = code(r u), codes[r][1] = code(r v)
  std::array<std::array<std::uint32_t, 2>, 4> codes;
  // Over the stabilizer images g of the point: bit g set if h <= g h / h == g h.
  std::uint8_t le_mask = 0;
  std::uint8_t eq_mask = 0;
  // Orbit images (index r + 4 * swap) giving the smallest first vector when
  // this half is the lower-q half.
  std::uint8_t first_min_mask = 0;
};

PreparedHalf prepare(const HalfPair& h, std::span<const Image> stabilizer) {
  PreparedHalf p{h.q, h.gamma, {}, 0, 0, 0};
  for (int r = 0; r < 4; ++r) p.codes[r] = {code(reflected(h.u, r)), code(reflected(h.v, r))};
  const std::uint64_t own = (std::uint64_t(p.codes[0][0]) << 32) | p.codes[0][1];
  for (std::size_t g = 0; g < stabilizer.size(); ++g) {
    const auto& c = p.codes[stabilizer[g].reflection];
    const std::uint64_t img = stabilizer[g].swap ? (std::uint64_t(c[1]) << 32) | c[0]
                                                 : (std::uint64_t(c[0]) << 32) | c[1];
    if (own <= img) p.le_mask |= std::uint8_t(1u << g);
    if (own == img) p.eq_mask |= std::uint8_t(1u << g);
  }
  std::uint32_t best = ~0u;
  for (int i = 0; i < 8; ++i) best = std::min(best, p.codes[i & 3][i >> 2]);
  for (int i = 0; i < 8; ++i) {
    if (p.codes[i & 3][i >> 2] == best) p.first_min_mask |= std::uint8_t(1u << i);
  }
  return p;
}

PackedKey image_key(const PreparedHalf& a, const PreparedHalf& b, int r, bool swap) {
  const auto& ca = a.codes[r];
  const auto& cb = b.codes[r];
  return swap ? join(ca[1], cb[0], ca[0], cb[1]) : join(ca[0], cb[1], ca[1], cb[0]);
}

struct Candidate {
  PackedKey key;
  std::uint32_t first;   // chain position of the lower-q half
  std::uint32_t second;  // chain position of the higher-q half
};

}  // namespace

std::vector<ResonantQuad> extract_point(const GatheredPoint& point, const HalfStore& store,
                                        bool expand_signs) {
  const DeficiencyPoint delta = point.delta;

  // Non-identity orbit elements that keep the deficiency point fixed.
  std::array<Image, 3> stabilizer_storage{};
  std::size_t stabilizer_size = 0;
  for (int g = 1; g < 8; ++g) {
    const bool flip_m = g & 1, flip_n = g & 2, swap = g & 4;
    if ((delta.dm == 0 || flip_m == swap) && (delta.dn == 0 || flip_n == swap)) {
      stabilizer_storage[stabilizer_size++] = {g & 3, swap};
    }
  }
  const std::span<const Image> stabilizer(stabilizer_storage.data(), stabilizer_size);
  const auto all_le = std::uint8_t((1u << stabilizer_size) - 1);

  std::vector<PreparedHalf> chain;
  for (const auto& h : store.chain_from(point.head)) chain.push_back(prepare(h, stabilizer));
  // pass3 appends class by class in ascending q, so chains are grouped by q.
  // Sorting is a no-op for such chains and keeps other insertion orders valid.
  std::stable_sort(chain.begin(), chain.end(),
                   [](const PreparedHalf& a, const PreparedHalf& b) { return a.q < b.q; });

  std::vector<std::size_t> next_class(chain.size(), chain.size());
  for (std::size_t i = chain.size(); i-- > 0;) {
    if (i + 1 < chain.size()) next_class[i] = chain[i + 1].q != chain[i].q ? i + 1 : next_class[i + 1];
  }

  // Every stabilizer image of a pair of halves is again a pair of stored
  // halves at this point, so keeping only pairs (a, b) with
  // (a, b) <= (g a, g b) for all g yields each orbit exactly once.
  std::vector<Candidate> found;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const PreparedHalf& a = chain[i];
    if (a.le_mask != all_le) continue;
    for (std::size_t j = next_class[i]; j < chain.size(); ++j) {
      const PreparedHalf& b = chain[j];
      if (a.eq_mask & ~b.le_mask) continue;
      const auto ia = static_cast<std::uint32_t>(i);
      const auto ib = static_cast<std::uint32_t>(j);
      if (!expand_signs) {
        PackedKey best = ~PackedKey(0);
        for (int g = 0; g < 8; ++g) {
          if (a.first_min_mask & (1u << g)) best = std::min(best, image_key(a, b, g & 3, g & 4));
        }
        found.push_back({best, ia, ib});
        continue;
      }
      std::array<PackedKey, 4> images{};
      std::size_t count = 0;
      for (int r = 0; r < 4; ++r) {
        const PackedKey img = std::min(image_key(a, b, r, false), image_key(a, b, r, true));
        if (std::find(images.begin(), images.begin() + count, img) == images.begin() + count) {
          images[count++] = img;
        }
      }
      for (std::size_t k = 0; k < count; ++k) found.push_back({images[k], ia, ib});
    }
  }

  std::sort(found.begin(), found.end(),
            [](const Candidate& x, const Candidate& y) { return x.key < y.key; });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const Candidate& x, const Candidate& y) { return x.key == y.key; }),
              found.end());

  std::vector<ResonantQuad> out;
  out.reserve(found.size());
  for (const auto& f : found) {
    const PreparedHalf& a = chain[f.first];
    const PreparedHalf& b = chain[f.second];
    out.push_back({decode(std::uint32_t(f.key >> 96)), decode(std::uint32_t(f.key >> 64)),
                   decode(std::uint32_t(f.key >> 32)), decode(std::uint32_t(f.key)), a.q,
                   a.gamma, b.q, b.gamma});
  }
  return out;
}

void pass5_stream(std::span<const GatheredPoint> gathered, const HalfStore& store,
                  bool expand_signs, unsigned workers, const SolutionBatchSink& sink) {
  workers = std::max(1u, workers);
  if (workers == 1) {
    for (const auto& point : gathered) sink(point.delta, extract_point(point, store, expand_signs));
    return;
  }
  // Each round, worker w extracts a contiguous block of points; blocks are
  // then handed to the sink in order.
  constexpr std::size_t kBlock = 64;
  std::vector<std::vector<std::vector<ResonantQuad>>> blocks(workers);
  for (std::size_t round = 0; round < gathered.size(); round += kBlock * workers) {
    {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          auto& block = blocks[w];
          block.clear();
          const std::size_t begin = std::min(gathered.size(), round + w * kBlock);
          const std::size_t end = std::min(gathered.size(), begin + kBlock);
          for (std::size_t i = begin; i < end; ++i) {
            block.push_back(extract_point(gathered[i], store, expand_signs));
          }
        });
      }
    }
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(gathered.size(), round + w * kBlock);
      for (std::size_t i = 0; i < blocks[w].size(); ++i) sink(gathered[begin + i].delta, blocks[w][i]);
    }
  }
}

std::vector<ResonantQuad> pass5_extract(std::span<const GatheredPoint> gathered,
                                        const HalfStore& store, bool expand_signs,
                                        unsigned workers) {
  std::vector<ResonantQuad> out;
  pass5_stream(gathered, store, expand_signs, workers,
               [&](DeficiencyPoint, std::span<const ResonantQuad> batch) {
                 out.insert(out.end(), batch.begin(), batch.end());
               });
  return out;
}

RunReport solve_stream(const SolverConfig& config, const SolutionBatchSink& sink) {
  if (config.domain_limit < 1 || config.domain_limit > kMaxPackedCoordinate) {
    throw std::invalid_argument("solve: domain limit must be in [1, " +
                                std::to_string(kMaxPackedCoordinate) + "], got " +
                                std::to_string(config.domain_limit));
  }
  using clock = std::chrono::steady_clock;
  RunReport report;
  report.domain_limit = config.domain_limit;
  report.mode = config.mode;
  report.expand_signs = config.expand_signs;
  report.workers = std::max(1u, config.workers);

  const auto run_start = clock::now();
  auto stage_start = run_start;
  auto finish_stage = [&](std::string name, const std::string& status) {
    const auto now = clock::now();
    const double secs = std::chrono::duration<double>(now - stage_start).count();
    report.timings.push_back({std::move(name), secs});
    stage_start = now;
    if (config.progress) {
      std::ostringstream os;
      os << report.timings.back().name << ": " << status << " (" << secs << " s)";
      config.progress(os.str());
    }
  };

  const auto catalog = build_class_catalog(config.domain_limit);
  report.classes_built = catalog.size();
  finish_stage("catalog", std::to_string(catalog.size()) + " classes");

  const auto grid = pass1_mark(catalog, config.mode);
  finish_stage("pass1 mark", "grid side " + std::to_string(grid.side()));

  const auto survivors = pass2_discard(grid, catalog, config.mode);
  report.classes_discarded = survivors.discarded;
  report.classes_surviving = survivors.survivors.size();
  finish_stage("pass2 discard", std::to_string(survivors.discarded) + " classes discarded, " +
                                    std::to_string(survivors.survivors.size()) + " remain");

  const auto store = pass3_link(survivors.survivors, config.domain_limit, config.mode);
  report.half_count = store.size();
  finish_stage("pass3 link", std::to_string(store.size()) + " halves");

  const auto gathered = pass4_gather(grid, store);
  report.gathered_points = gathered.size();
  for (const auto& g : gathered) {
    for (const auto& h : store.chain_from(g.head)) {
      ++report.linked_half_count;
      // (-v, -u) sits on the same point; count the smaller of the two.
      const auto conj = std::pair{-h.v, -h.u};
      if (std::pair{h.u, h.v} <= conj) ++report.linked_conjugate_pairs;
    }
  }
  finish_stage("pass4 gather", std::to_string(gathered.size()) + " interaction points, " +
                                   std::to_string(report.linked_half_count) + " linked halves");

  pass5_stream(gathered, store, config.expand_signs, report.workers,
               [&](DeficiencyPoint delta, std::span<const ResonantQuad> batch) {
                 report.solution_count += batch.size();
                 if (!batch.empty()) sink(delta, batch);
               });
  finish_stage("pass5 extract", std::to_string(report.solution_count) + " solutions");

  report.total_seconds = std::chrono::duration<double>(clock::now() - run_start).count();
  return report;
}

SolveResult solve(const SolverConfig& config) {
  SolveResult result;
  result.report = solve_stream(config, [&](DeficiencyPoint, std::span<const ResonantQuad> batch) {
    result.solutions.insert(result.solutions.end(), batch.begin(), batch.end());
  });
  return result;
}

DeficiencyPoint deficiency_of(const ResonantQuad& quad) {
  return {std::abs(quad.k1.m - quad.k3.m), std::abs(quad.k1.n - quad.k3.n)};
}

bool solution_order(const ResonantQuad& a, const ResonantQuad& b) {
  const auto da = deficiency_of(a);
  const auto db = deficiency_of(b);
  if (da != db) return da < db;
  return a < b;
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("RESONANCE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace resonance
