#pragma once

namespace gbswitch::special {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// ln Γ(x) for x > 0 (Lanczos, g = 7).
double log_gamma(double x);

/// Γ(x) for x > 0; overflows to +∞ past x ≈ 171.6.
double gamma(double x);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0.
double digamma(double x);

/// H_m = Σ_{k=1}^m 1/k, compensated summation.
double harmonic(int m);

}  // namespace gbswitch::special
