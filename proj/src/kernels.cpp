#include "mgt/kernels.hpp"

namespace mgt::kernels {

namespace {
ExecMode g_default_mode = ExecMode::Auto;
}

ExecMode default_mode() { return g_default_mode; }

void set_default_mode(ExecMode mode) { g_default_mode = mode; }

std::vector<std::array<std::int32_t, 3>> associativity_violations(const std::int32_t* mul,
                                                                  std::int32_t order, int cap,
                                                                  ExecMode mode) {
  const std::int64_t n = order;
  const std::int64_t total = n * n * n;
  auto violates = [mul, n](std::int64_t idx) {
    const std::int64_t a = idx / (n * n);
    const std::int64_t b = (idx / n) % n;
    const std::int64_t c = idx % n;
    const std::int32_t ab = mul[a * n + b];
    const std::int32_t bc = mul[b * n + c];
    return mul[ab * n + c] != mul[a * n + bc];
  };
  std::vector<std::array<std::int32_t, 3>> result;
  for (std::int64_t idx : find_violations(total, violates, cap, mode))
    result.push_back(decode3(idx, order));
  return result;
}

}  // namespace mgt::kernels
