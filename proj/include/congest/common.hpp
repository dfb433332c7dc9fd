#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace congest {

using NodeId = std::int32_t;
using Weight = std::int64_t;

// Sentinel for "unreachable". All distance arithmetic must go through
// sat_add so the sentinel is absorbing.
inline constexpr Weight kInf = std::numeric_limits<Weight>::max();

inline Weight sat_add(Weight a, Weight b) {
  if (a == kInf || b == kInf) return kInf;
  if (a > kInf - b) return kInf;
  return a + b;
}

enum class Err {
  InvalidInput,
  Disconnected,
  NotComplete,
  MaxRoundsExceeded,
  CapacityExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Err code, const std::string& what) {
  if (!ok) fail(code, what);
}

// ceil(a/b) for a >= 0, b > 0.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Smallest k with 2^k >= x (x >= 1).
inline int ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0 : std::bit_width(x - 1);
}

// ceil(log2(n)) clamped below at 1; the usual "log n" factor in round budgets.
inline std::int64_t log2_ceil_min1(std::int64_t n) {
  return n <= 2 ? 1 : ceil_log2(static_cast<std::uint64_t>(n));
}

inline std::int64_t isqrt_ceil(std::int64_t n) {
  if (n <= 0) return 0;
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while ((r - 1) * (r - 1) >= n) --r;
  return r;
}

}  // namespace congest
