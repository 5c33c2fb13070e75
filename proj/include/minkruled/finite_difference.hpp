#pragma once

// Five-point central stencils. Orders 1 and 2 are fourth-order accurate,
// order 3 is second-order accurate.

#include <concepts>

namespace minkruled::fd {

template <typename F>
auto first(F&& f, double s, double h) {
  return (f(s - 2 * h) - 8.0 * f(s - h) + 8.0 * f(s + h) - f(s + 2 * h)) * (1.0 / (12.0 * h));
}

template <typename F>
auto second(F&& f, double s, double h) {
  return (-1.0 * f(s - 2 * h) + 16.0 * f(s - h) - 30.0 * f(s) + 16.0 * f(s + h) - f(s + 2 * h))
         * (1.0 / (12.0 * h * h));
}

template <typename F>
auto third(F&& f, double s, double h) {
  return (-1.0 * f(s - 2 * h) + 2.0 * f(s - h) - 2.0 * f(s + h) + f(s + 2 * h))
         * (1.0 / (2.0 * h * h * h));
}

/// Half-width of every stencil above, in units of h.
inline constexpr double reach = 2.0;

}  // namespace minkruled::fd
