#pragma once

#include "nswp/scenarios.hpp"

namespace nswp {

/// Airy function Ai(x), accurate to ~1e-13 (relative on x > 0, relative to the
/// oscillation envelope on x < 0). Underflows to 0 for large positive x.
double airy_ai(double x);

/// Derivative Ai'(x), same accuracy class.
double airy_ai_prime(double x);

/// Largest supported oscillator level.
inline constexpr int kMaxShoLevel = 60;

/// Unit-normalized oscillator eigenfunction psi_n(x) with E_n = (n + 1/2) hbar w,
/// built from the three-term recurrence on normalized Hermite functions.
/// Throws std::out_of_range for n outside [0, kMaxShoLevel].
double sho_eigenfunction(int n, double x, const PhysicalParams& params, double omega);

}  // namespace nswp
