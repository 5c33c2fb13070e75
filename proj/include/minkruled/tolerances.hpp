#pragma once

namespace minkruled::tol {

// Causal classification and "is this zero" decisions, scaled by max(1, |u|^2).
inline constexpr double null_rel = 1e-9;

inline constexpr double speed = 1e-6;
inline constexpr double frame_analytic = 1e-8;
inline constexpr double frame_fd = 1e-4;
inline constexpr double kappa_min = 1e-8;
inline constexpr double helix = 1e-6;

// Finite-difference steps: orders 1-2 and order 3 of the position, and the
// step used for theta and for ruling derivatives.
inline constexpr double h_low = 1e-4;
inline constexpr double h_third = 1e-3;

inline constexpr double integrator_step = 1e-3;

inline constexpr double cusp = 1e-3;

inline constexpr double dev_analytic = 1e-6;
inline constexpr double dev_fd = 1e-4;
inline constexpr double strict = 1e-4;

// |X'| below this (coordinate norm) is treated as a constant ruling.
inline constexpr double cylindrical_analytic = 1e-9;
inline constexpr double cylindrical_fd = 1e-7;

}  // namespace minkruled::tol
