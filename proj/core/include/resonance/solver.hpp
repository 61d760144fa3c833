#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resonance/catalog.hpp"
#include "resonance/deficiency.hpp"
#include "resonance/types.hpp"

namespace resonance {

/// Saturating byte counters over the nonnegative deficiency points [0, 2D]^2.
class DeficiencyGrid {
 public:
  static constexpr std::uint8_t kSaturation = 255;

  explicit DeficiencyGrid(std::int32_t domain_limit);

  std::int32_t domain_limit() const { return domain_limit_; }
  std::int32_t side() const { return side_; }
  std::size_t cell_count() const { return cells_.size(); }

  std::uint8_t at(DeficiencyPoint p) const { return cells_[index(p)]; }
  void increment(DeficiencyPoint p) {
    auto& c = cells_[index(p)];
    if (c != kSaturation) ++c;
  }
  std::size_t index(DeficiencyPoint p) const {
    return static_cast<std::size_t>(p.dm) * static_cast<std::size_t>(side_) +
           static_cast<std::size_t>(p.dn);
  }
  DeficiencyPoint point(std::size_t index) const {
    return {static_cast<std::int32_t>(index / static_cast<std::size_t>(side_)),
            static_cast<std::int32_t>(index % static_cast<std::size_t>(side_))};
  }

 private:
  std::int32_t domain_limit_;
  std::int32_t side_;
  std::vector<std::uint8_t> cells_;
};

/// Append-only half-pair table with per-point chains threaded through a
/// next-index column. Index 0 terminates a chain; entry i is stored at
/// position i - 1.
class HalfStore {
 public:
  using Index = std::uint32_t;

  class ChainIterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = HalfPair;
    using difference_type = std::ptrdiff_t;
    using pointer = const HalfPair*;
    using reference = const HalfPair&;

    ChainIterator() = default;
    ChainIterator(const HalfStore* store, Index at) : store_(store), at_(at) {}
    reference operator*() const { return store_->entry(at_); }
    pointer operator->() const { return &store_->entry(at_); }
    ChainIterator& operator++() {
      at_ = store_->next(at_);
      return *this;
    }
    ChainIterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    Index index() const { return at_; }
    friend bool operator==(const ChainIterator& a, const ChainIterator& b) {
      return a.at_ == b.at_;
    }

   private:
    const HalfStore* store_ = nullptr;
    Index at_ = 0;
  };

  struct Chain {
    ChainIterator first;
    ChainIterator last;
    ChainIterator begin() const { return first; }
    ChainIterator end() const { return last; }
  };

  explicit HalfStore(std::int32_t domain_limit);

  void append(const HalfPair& half);

  std::size_t size() const { return entries_.size(); }
  const HalfPair& entry(Index i) const { return entries_[i - 1]; }
  Index next(Index i) const { return next_[i - 1]; }
  Index head(DeficiencyPoint p) const { return heads_[cell(p)]; }

  Chain chain(DeficiencyPoint p) const { return chain_from(head(p)); }
  Chain chain_from(Index head) const { return {{this, head}, {this, 0}}; }
  std::size_t chain_length(DeficiencyPoint p) const;

 private:
  std::size_t cell(DeficiencyPoint p) const {
    return static_cast<std::size_t>(p.dm) * static_cast<std::size_t>(side_) +
           static_cast<std::size_t>(p.dn);
  }

  std::int32_t side_;
  std::vector<HalfPair> entries_;
  std::vector<Index> next_;
  std::vector<Index> heads_;
  std::vector<Index> tails_;  // last entry seen per point
};

struct GatheredPoint {
  DeficiencyPoint delta;
  HalfStore::Index head = 0;
};

struct SurvivorSet {
  std::vector<const ClassRecord*> survivors;
  std::size_t discarded = 0;
};

struct SolverConfig {
  std::int32_t domain_limit = 1;
  DeficiencyMode mode = DeficiencyMode::complete;
  bool expand_signs = false;
  unsigned workers = 1;
  /// Called once per pass with a one-line status; may be empty.
  std::function<void(std::string_view)> progress;
};

struct PassTiming {
  std::string name;
  double seconds = 0.0;
};

struct RunReport {
  std::int32_t domain_limit = 0;
  DeficiencyMode mode = DeficiencyMode::complete;
  bool expand_signs = false;
  unsigned workers = 1;
  std::size_t classes_built = 0;
  std::size_t classes_discarded = 0;
  std::size_t classes_surviving = 0;
  std::size_t half_count = 0;         ///< entries in the half store
  std::size_t linked_half_count = 0;  ///< entries on gathered points
  /// linked_half_count with (u, v) and its conjugate (-v, -u) counted once
  std::size_t linked_conjugate_pairs = 0;
  std::size_t gathered_points = 0;
  std::size_t solution_count = 0;
  std::vector<PassTiming> timings;
  double total_seconds = 0.0;
};

struct SolveResult {
  std::vector<ResonantQuad> solutions;  ///< canonical, unique, in solution_order
  RunReport report;
};

DeficiencyGrid pass1_mark(const ClassCatalog& catalog, DeficiencyMode mode);

SurvivorSet pass2_discard(const DeficiencyGrid& grid, const ClassCatalog& catalog,
                          DeficiencyMode mode);

HalfStore pass3_link(std::span<const ClassRecord* const> survivors, std::int32_t domain_limit,
                     DeficiencyMode mode);

std::vector<GatheredPoint> pass4_gather(const DeficiencyGrid& grid, const HalfStore& store);

/// Receives the solutions of one interaction point: canonical, sorted, unique.
using SolutionBatchSink =
    std::function<void(DeficiencyPoint delta, std::span<const ResonantQuad> batch)>;

/// Solutions of one gathered point: pairs of halves of distinct classes, one
/// per symmetry orbit (plus its distinct reflections with `expand_signs`),
/// canonicalized, sorted and unique.
std::vector<ResonantQuad> extract_point(const GatheredPoint& point, const HalfStore& store,
                                        bool expand_signs);

/// Streams the solutions of every gathered point to `sink`, in gathered
/// order. Points are processed by `workers` threads; the sink is always
/// called from the calling thread in the same order.
void pass5_stream(std::span<const GatheredPoint> gathered, const HalfStore& store,
                  bool expand_signs, unsigned workers, const SolutionBatchSink& sink);

/// pass5_stream collected into one vector. Since the deficiency point of a
/// solution is an orbit invariant, the result is unique and ordered by
/// (deficiency point, quad).
std::vector<ResonantQuad> pass5_extract(std::span<const GatheredPoint> gathered,
                                        const HalfStore& store, bool expand_signs,
                                        unsigned workers = 1);

/// Runs catalog construction and the five passes, streaming solutions to
/// `sink`. Throws std::invalid_argument for an invalid configuration;
/// exceptions thrown by the sink propagate unchanged.
RunReport solve_stream(const SolverConfig& config, const SolutionBatchSink& sink);

/// solve_stream collected into memory. Only practical for moderate D: the
/// solution count grows roughly like D^3.
SolveResult solve(const SolverConfig& config);

/// Deficiency point of a valid quad: |k1 - k3| coordinate-wise.
DeficiencyPoint deficiency_of(const ResonantQuad& quad);

/// Output order of solutions: by deficiency point, then by (k1, k2, k3, k4).
bool solution_order(const ResonantQuad& a, const ResonantQuad& b);

/// Worker count from RESONANCE_WORKERS, falling back to the hardware count.
unsigned default_worker_count();

}  // namespace resonance
