#pragma once

#include <array>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgt::kernels {

// Execution mode for the exhaustive sweep kernels.  Serial is the reference
// implementation; Parallel is the OpenMP version.  Auto picks Parallel for
// sweeps large enough to amortize thread startup.  Both produce identical
// results: the first `cap` violating indices in ascending order.
enum class ExecMode { Auto, Serial, Parallel };

ExecMode default_mode();
void set_default_mode(ExecMode mode);

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Sweeps below this size run serially even in Auto mode.
inline constexpr std::int64_t kAutoParallelThreshold = 1 << 16;
// Work is split into fixed blocks; each block collects at most `cap` hits,
// which is enough to reconstruct the global first-cap list.
inline constexpr std::int64_t kBlockSize = 1 << 14;

template <class Pred>
std::vector<std::int64_t> find_violations_serial(std::int64_t total, Pred&& pred, int cap) {
  std::vector<std::int64_t> hits;
  if (cap <= 0) cap = 1;
  for (std::int64_t i = 0; i < total; ++i) {
    if (pred(i)) {
      hits.push_back(i);
      if (static_cast<int>(hits.size()) >= cap) break;
    }
  }
  return hits;
}

template <class Pred>
std::vector<std::int64_t> find_violations_parallel(std::int64_t total, Pred&& pred, int cap) {
  if (cap <= 0) cap = 1;
#ifdef _OPENMP
  const std::int64_t nblocks = (total + kBlockSize - 1) / kBlockSize;
  std::vector<std::vector<std::int64_t>> block_hits(static_cast<size_t>(nblocks));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    auto& out = block_hits[static_cast<size_t>(b)];
    const std::int64_t lo = b * kBlockSize;
    const std::int64_t hi = std::min(total, lo + kBlockSize);
    for (std::int64_t i = lo; i < hi; ++i) {
      if (pred(i)) {
        out.push_back(i);
        if (static_cast<int>(out.size()) >= cap) break;
      }
    }
  }
  // Blocks are disjoint ascending ranges, so concatenation in block order is
  // already sorted; any hit in the global first cap lies in its own block's
  // first cap, so truncation gives exactly the serial answer.
  std::vector<std::int64_t> hits;
  for (const auto& blk : block_hits) {
    for (std::int64_t i : blk) {
      hits.push_back(i);
      if (static_cast<int>(hits.size()) >= cap) return hits;
    }
  }
  return hits;
#else
  return find_violations_serial(total, pred, cap);
#endif
}

template <class Pred>
std::vector<std::int64_t> find_violations(std::int64_t total, Pred&& pred, int cap,
                                          ExecMode mode = ExecMode::Auto) {
  if (mode == ExecMode::Auto) mode = default_mode();
  const bool parallel =
      mode == ExecMode::Parallel ||
      (mode == ExecMode::Auto && total >= kAutoParallelThreshold && thread_count() > 1);
  if (parallel) return find_violations_parallel(total, pred, cap);
  return find_violations_serial(total, pred, cap);
}

// Decodes a linear index into digit tuples, most significant first, all
// digits in [0, base).  Used to turn sweep indices back into witnesses.
inline std::array<std::int32_t, 2> decode2(std::int64_t idx, std::int32_t base) {
  return {static_cast<std::int32_t>(idx / base), static_cast<std::int32_t>(idx % base)};
}
inline std::array<std::int32_t, 3> decode3(std::int64_t idx, std::int32_t base) {
  const std::int64_t b2 = static_cast<std::int64_t>(base) * base;
  return {static_cast<std::int32_t>(idx / b2), static_cast<std::int32_t>((idx / base) % base),
          static_cast<std::int32_t>(idx % base)};
}

// Associativity sweep over a flat order x order multiplication table:
// returns the first `cap` triples (a, b, c) with (a*b)*c != a*(b*c).
std::vector<std::array<std::int32_t, 3>> associativity_violations(const std::int32_t* mul,
                                                                  std::int32_t order, int cap,
                                                                  ExecMode mode = ExecMode::Auto);

}  // namespace mgt::kernels
