#include <doctest.h>

#include "mgt/group.hpp"
#include "mgt/kernels.hpp"

using namespace mgt;
using kernels::ExecMode;

namespace {

// Sweep sizes straddle the block size so the parallel path exercises
// multi-block merging.
const std::int64_t kSizes[] = {0, 1, 100, kernels::kBlockSize - 1, kernels::kBlockSize + 17,
                               5 * kernels::kBlockSize + 3};

}  // namespace

TEST_CASE("serial and parallel sweeps agree") {
  auto none = [](std::int64_t) { return false; };
  auto all = [](std::int64_t) { return true; };
  auto sparse = [](std::int64_t i) { return i % 7 == 3; };
  auto tail = [](std::int64_t i) { return i >= 4 * kernels::kBlockSize; };

  for (std::int64_t total : kSizes) {
    for (int cap : {1, 3, 10, 1000}) {
      CAPTURE(total);
      CAPTURE(cap);
      CHECK(kernels::find_violations_serial(total, none, cap) ==
            kernels::find_violations_parallel(total, none, cap));
      CHECK(kernels::find_violations_serial(total, all, cap) ==
            kernels::find_violations_parallel(total, all, cap));
      CHECK(kernels::find_violations_serial(total, sparse, cap) ==
            kernels::find_violations_parallel(total, sparse, cap));
      CHECK(kernels::find_violations_serial(total, tail, cap) ==
            kernels::find_violations_parallel(total, tail, cap));
    }
  }
}

TEST_CASE("violations arrive in ascending order with the cap honored") {
  auto sparse = [](std::int64_t i) { return i % 5 == 0; };
  const auto hits = kernels::find_violations_parallel(1000, sparse, 7);
  REQUIRE(hits.size() == 7);
  for (size_t i = 0; i < hits.size(); ++i) CHECK(hits[i] == static_cast<std::int64_t>(5 * i));
}

TEST_CASE("associativity kernel on a valid and a corrupted table") {
  const GroupTable G = cyclic_group(16);
  CHECK(kernels::associativity_violations(G.raw(), G.order(), 5, ExecMode::Serial).empty());
  CHECK(kernels::associativity_violations(G.raw(), G.order(), 5, ExecMode::Parallel).empty());

  // Corrupt one cell; both modes must report the same first violations.
  std::vector<std::int32_t> bad(G.flat().begin(), G.flat().end());
  bad[5 * 16 + 7] = (bad[5 * 16 + 7] + 1) % 16;
  const auto serial = kernels::associativity_violations(bad.data(), 16, 4, ExecMode::Serial);
  const auto parallel = kernels::associativity_violations(bad.data(), 16, 4, ExecMode::Parallel);
  REQUIRE_FALSE(serial.empty());
  CHECK(serial == parallel);
  // Brute-force reference for the first violating triple.
  std::array<std::int32_t, 3> first{-1, -1, -1};
  for (std::int32_t a = 0; a < 16 && first[0] < 0; ++a)
    for (std::int32_t b = 0; b < 16 && first[0] < 0; ++b)
      for (std::int32_t c = 0; c < 16; ++c) {
        if (bad[bad[a * 16 + b] * 16 + c] != bad[a * 16 + bad[b * 16 + c]]) {
          first = {a, b, c};
          break;
        }
      }
  CHECK(serial[0] == first);
}

TEST_CASE("default mode switch") {
  kernels::set_default_mode(ExecMode::Serial);
  CHECK(kernels::default_mode() == ExecMode::Serial);
  kernels::set_default_mode(ExecMode::Auto);
  CHECK(kernels::default_mode() == ExecMode::Auto);
}
