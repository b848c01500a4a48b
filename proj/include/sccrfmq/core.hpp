#ifndef SCCRFMQ_CORE_HPP
#define SCCRFMQ_CORE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>

namespace sccrfmq {

inline constexpr double kPi = 3.14159265358979323846;

// Discretized environment state. Matrix games use the single state 0; the
// boat problem maps its 5-tuple onto [0, 5e6).
using StateId = std::uint32_t;

// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  constexpr bool valid() const { return lo <= hi; }
  constexpr bool contains(double x) const { return x >= lo && x <= hi; }
  constexpr double width() const { return hi - lo; }
};

inline constexpr Interval kUnitInterval{0.0, 1.0};

// Clamp x into iv. Total function: never throws for a valid interval.
constexpr double project(double x, Interval iv) {
  if (x < iv.lo) return iv.lo;
  if (x > iv.hi) return iv.hi;
  return x;
}

// Index of the maximum value; ties break toward the lowest index.
inline std::size_t argmax_first(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("argmax_first: empty list");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

// One environment step as seen by the learners.
struct Transition {
  StateId next = 0;
  double reward = 0.0;
  bool terminal = true;
};

}  // namespace sccrfmq

#endif  // SCCRFMQ_CORE_HPP
