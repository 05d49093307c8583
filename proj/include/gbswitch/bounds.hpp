#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gbswitch/rational.hpp"

namespace gbswitch::bounds {

// Exponent formulas work on exact rationals; p = ∞ is handled through the
// exact limit of each formula.

enum class RegionKind { Admissible, NonAdmissible, Unknown };

std::string_view to_string(RegionKind kind);

/// Classification of a summability exponent r (or of the optimal one).
struct RegionVerdict {
  RegionKind kind;
  std::optional<Exponent> sharp_exponent;
  /// [lo, hi]; hi may be ∞.
  std::optional<Exponent> lo;
  std::optional<Exponent> hi;
};

/// Hardy–Littlewood exponent for m-linear forms on ℓp: p/(p−m) for
/// m < p ≤ 2m, 2mp/(mp+p−2m) for p ≥ 2m, 2m/(m+1) at p = ∞.
Rational hl_exponent(int m, const Exponent& p);

/// Optimal summability exponent for unimodular m-linear forms on ℓp.
/// p ≥ 2: Admissible, sharp 2mp/(mp+p−2m).
/// 2m/(m+1) < p < 2: Unknown in [mp/(p−1), 2mp/(mp+p−2m)].
/// 1 < p ≤ 2m/(m+1): Unknown in [mp/(p−1), ∞).
RegionVerdict unimodular_sharp_exponent(int m, const Exponent& p);

/// Whether the coefficient ℓr inequality holds for every unimodular form on
/// ℓp with an n-independent constant: Admissible, NonAdmissible or Unknown.
RegionVerdict classify_point(int m, const Exponent& p, const Exponent& r);

/// Kahane–Salem–Zygmund exponent max{1/2 + m(1/2 − 1/p), 1 − 1/p}.
Rational ksz_exponent(int m, const Exponent& p);

/// Growth exponent max{(2mr+2mp−mpr−pr)/(2pr), 0} of the constant when the
/// coefficient norm is ℓr; requires p > 2m/(m+1).
Rational blowup_exponent(int m, const Exponent& p, const Rational& r);

/// Lower end max{(mp+r−pr)/(pr), 0} of the known range for the optimal
/// growth exponent when 2m/(m+1) < p < 2.
Rational blowup_lower_exponent(int m, const Exponent& p, const Rational& r);

/// f(p) = (2^{(p−2)/2} Γ((p+1)/2) / Γ(3/2))^{−1} for 1 ≤ p ≤ 2.
double haagerup_f(double p);
double haagerup_f(const Exponent& p);

/// ∏_{k=2}^m f(2(k−1)/k), the asymptotic Bohnenblust–Hille constant.
double bh_asymptotic_constant(int m);

/// Same constant through 2^{ψ(m+1)+γ−1} ∏_{k=2}^m Γ(3/2)/Γ((3k−2)/(2k)).
double bh_asymptotic_constant_digamma(int m);

/// 1.3·m^{0.365}.
double km_constant(int m);

/// (2 − ln 2 − γ)/2, the exponent that 0.365 abbreviates.
double km_exponent_exact();

enum class Conjecture {
  /// Optimal summability exponent: mp/(p−1) on [1, 2], 2mp/(mp+p−2m) for p ≥ 2.
  SummabilityExponent,
  /// Blow-up rate: max{(mp+r−pr)/(pr), 0} on (1, 2], the proven formula for p ≥ 2.
  BlowupRate,
};

/// A conjectured value. `verified` is always false; outputs print it as
/// UNVERIFIED.
struct ConjecturalValue {
  Exponent value;
  bool verified = false;
  static constexpr std::string_view kTag = "UNVERIFIED";
};

ConjecturalValue conjecture_exponent(int m, const Exponent& p, Conjecture which,
                                     std::optional<Rational> r = std::nullopt);

/// One sample of the region boundary curves for plotting.
struct BoundaryPoint {
  Rational p;
  /// mp/(p−1), the non-admissible/unknown boundary (absent at p = 1).
  std::optional<Rational> lower;
  /// 2mp/(mp+p−2m), the admissible boundary (absent for p ≤ 2m/(m+1)).
  std::optional<Rational> upper;
};

/// Boundary curves sampled at p = p_lo + k·(p_hi − p_lo)/steps, k = 0..steps.
std::vector<BoundaryPoint> region_polyline(int m, const Rational& p_lo, const Rational& p_hi,
                                           std::size_t steps);

}  // namespace gbswitch::bounds
