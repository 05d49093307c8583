#include "gbswitch/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gbswitch/error.hpp"
#include "gbswitch/special_functions.hpp"

namespace gbswitch::bounds {

namespace {

void require_multilinear(int m) {
  if (m < 2) throw Error(ErrorKind::DimMismatch, "multilinear formulas need m >= 2, got " + std::to_string(m));
}

[[noreturn]] void bad_exponent(const std::string& what, const Exponent& p) {
  throw Error(ErrorKind::InvalidExponent, what + ", got p=" + p.str());
}

Rational critical_p(int m) { return {2 * m, m + 1}; }

// 2mp/(mp+p−2m); p must exceed 2m/(m+1).
Rational sharp_value(int m, const Exponent& p) {
  if (p.is_infinite()) return {2 * m, m + 1};
  const Rational& v = p.value();
  const Rational mm(m);
  return Rational(2) * mm * v / (mm * v + v - Rational(2) * mm);
}

// mp/(p−1), ∞ at p = 1.
Exponent lower_value(int m, const Exponent& p) {
  if (p.is_infinite()) return Rational(m);
  const Rational& v = p.value();
  if (v == Rational(1)) return Exponent::infinity();
  return Rational(m) * v / (v - Rational(1));
}

}  // namespace

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Admissible: return "admissible";
    case RegionKind::NonAdmissible: return "non-admissible";
    case RegionKind::Unknown: return "unknown";
  }
  return "unknown";
}

Rational hl_exponent(int m, const Exponent& p) {
  require_multilinear(m);
  if (p.is_infinite()) return {2 * m, m + 1};
  const Rational& v = p.value();
  if (v <= Rational(m)) bad_exponent("Hardy-Littlewood exponents need p > m", p);
  if (v <= Rational(2 * m)) return v / (v - Rational(m));
  return sharp_value(m, p);
}

RegionVerdict unimodular_sharp_exponent(int m, const Exponent& p) {
  require_multilinear(m);
  if (p.is_finite() && p.value() <= Rational(1)) bad_exponent("need p > 1", p);
  if (p >= Exponent(2)) {
    return {RegionKind::Admissible, Exponent(sharp_value(m, p)), std::nullopt, std::nullopt};
  }
  if (p.value() > critical_p(m)) {
    return {RegionKind::Unknown, std::nullopt, lower_value(m, p), Exponent(sharp_value(m, p))};
  }
  return {RegionKind::Unknown, std::nullopt, lower_value(m, p), Exponent::infinity()};
}

RegionVerdict classify_point(int m, const Exponent& p, const Exponent& r) {
  require_multilinear(m);
  if (p.is_finite() && p.value() <= Rational(1)) bad_exponent("need p > 1", p);
  if (r.is_finite() && r.value().sign() <= 0) {
    throw Error(ErrorKind::InvalidExponent, "r must be positive");
  }
  const bool above_critical = p.is_infinite() || p.value() > critical_p(m);
  const Exponent lower = lower_value(m, p);
  if (p >= Exponent(2)) {
    const Exponent sharp = sharp_value(m, p);
    return {r >= sharp ? RegionKind::Admissible : RegionKind::NonAdmissible, sharp, std::nullopt,
            std::nullopt};
  }
  if (above_critical) {
    const Exponent sharp = sharp_value(m, p);
    if (r >= sharp) return {RegionKind::Admissible, std::nullopt, lower, sharp};
    if (r < lower) return {RegionKind::NonAdmissible, std::nullopt, lower, sharp};
    return {RegionKind::Unknown, std::nullopt, lower, sharp};
  }
  if (r < lower) return {RegionKind::NonAdmissible, std::nullopt, lower, Exponent::infinity()};
  return {RegionKind::Unknown, std::nullopt, lower, Exponent::infinity()};
}

Rational ksz_exponent(int m, const Exponent& p) {
  if (m < 1) throw Error(ErrorKind::DimMismatch, "m must be positive");
  if (p.is_infinite()) return {m + 1, 2};
  const Rational& v = p.value();
  if (v < Rational(1)) bad_exponent("KSZ exponent needs p >= 1", p);
  const Rational inv = Rational(1) / v;
  const Rational half(1, 2);
  return max(half + Rational(m) * (half - inv), Rational(1) - inv);
}

Rational blowup_exponent(int m, const Exponent& p, const Rational& r) {
  if (m < 1) throw Error(ErrorKind::DimMismatch, "m must be positive");
  if (r.sign() <= 0) throw Error(ErrorKind::InvalidExponent, "r must be positive, got " + r.str());
  if (p.is_finite() && p.value() <= critical_p(m)) bad_exponent("blow-up rate needs p > 2m/(m+1)", p);
  const Rational mm(m);
  if (p.is_infinite()) {
    return max((Rational(2) * mm - mm * r - r) / (Rational(2) * r), Rational(0));
  }
  const Rational& v = p.value();
  const Rational num = Rational(2) * mm * r + Rational(2) * mm * v - mm * v * r - v * r;
  return max(num / (Rational(2) * v * r), Rational(0));
}

Rational blowup_lower_exponent(int m, const Exponent& p, const Rational& r) {
  if (m < 1) throw Error(ErrorKind::DimMismatch, "m must be positive");
  if (r.sign() <= 0) throw Error(ErrorKind::InvalidExponent, "r must be positive, got " + r.str());
  if (p.is_finite() && p.value() <= Rational(1)) bad_exponent("need p > 1", p);
  const Rational mm(m);
  if (p.is_infinite()) return max((mm - r) / r, Rational(0));
  const Rational& v = p.value();
  return max((mm * v + r - v * r) / (v * r), Rational(0));
}

double haagerup_f(double p) {
  if (!(p >= 1.0 && p <= 2.0)) {
    throw Error(ErrorKind::InvalidExponent, "Haagerup constant needs 1 <= p <= 2, got " + std::to_string(p));
  }
  const double log_ratio = special::log_gamma((p + 1.0) / 2.0) - special::log_gamma(1.5);
  return std::exp(-((p - 2.0) / 2.0) * std::log(2.0) - log_ratio);
}

double haagerup_f(const Exponent& p) {
  if (p.is_infinite()) bad_exponent("Haagerup constant needs 1 <= p <= 2", p);
  return haagerup_f(p.value().to_double());
}

double bh_asymptotic_constant_digamma(int m) {
  if (m < 1) throw Error(ErrorKind::DimMismatch, "m must be positive");
  double log_value = (special::digamma(m + 1.0) + special::kEulerGamma - 1.0) * std::log(2.0);
  const double log_g32 = special::log_gamma(1.5);
  for (int k = 2; k <= m; ++k) {
    log_value += log_g32 - special::log_gamma((3.0 * k - 2.0) / (2.0 * k));
  }
  return std::exp(log_value);
}

double bh_asymptotic_constant(int m) {
  if (m < 1) throw Error(ErrorKind::DimMismatch, "m must be positive");
  double log_value = 0.0;
  for (int k = 2; k <= m; ++k) {
    const Rational p(2 * (k - 1), k);
    log_value += std::log(haagerup_f(p.to_double()));
  }
  const double value = std::exp(log_value);
  const double check = bh_asymptotic_constant_digamma(m);
  if (std::abs(value - check) > 1e-10 * std::max(1.0, value)) {
    throw std::logic_error("bh_asymptotic_constant: product and digamma forms disagree for m=" +
                           std::to_string(m));
  }
  return value;
}

double km_constant(int m) {
  if (m < 1) throw Error(ErrorKind::DimMismatch, "m must be positive");
  return 1.3 * std::pow(static_cast<double>(m), 0.365);
}

double km_exponent_exact() { return (2.0 - std::log(2.0) - special::kEulerGamma) / 2.0; }

ConjecturalValue conjecture_exponent(int m, const Exponent& p, Conjecture which,
                                     std::optional<Rational> r) {
  require_multilinear(m);
  switch (which) {
    case Conjecture::SummabilityExponent:
      if (p.is_finite() && p.value() < Rational(1)) bad_exponent("conjecture covers p in [1, inf]", p);
      if (p <= Exponent(2)) return {lower_value(m, p)};
      return {Exponent(sharp_value(m, p))};
    case Conjecture::BlowupRate:
      if (!r) throw Error(ErrorKind::InvalidExponent, "blow-up conjecture needs r");
      if (p.is_finite() && p.value() <= Rational(1)) bad_exponent("conjecture covers p in (1, inf]", p);
      if (p <= Exponent(2)) return {Exponent(blowup_lower_exponent(m, p, *r))};
      return {Exponent(blowup_exponent(m, p, *r))};
  }
  throw std::logic_error("unreachable");
}

std::vector<BoundaryPoint> region_polyline(int m, const Rational& p_lo, const Rational& p_hi,
                                           std::size_t steps) {
  require_multilinear(m);
  if (p_lo < Rational(1) || !(p_lo < p_hi) || steps == 0) {
    throw Error(ErrorKind::InvalidExponent, "need 1 <= p_lo < p_hi and steps >= 1");
  }
  std::vector<BoundaryPoint> out;
  const Rational step = (p_hi - p_lo) / Rational(static_cast<std::int64_t>(steps));
  for (std::size_t k = 0; k <= steps; ++k) {
    const Rational p = p_lo + step * Rational(static_cast<std::int64_t>(k));
    BoundaryPoint point{p, std::nullopt, std::nullopt};
    if (p > Rational(1)) point.lower = lower_value(m, p).value();
    if (p > critical_p(m)) point.upper = sharp_value(m, p);
    out.push_back(point);
  }
  return out;
}

}  // namespace gbswitch::bounds
