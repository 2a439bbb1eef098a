#pragma once

// Periodic elements: x with x^p = D^q for some p > 0.  The SSS
// representative of a periodic element is a pure D power or a single-simple
// form D^k [s(i,p)] with p + k*l divisible by m in its factor, which turns
// periodicity detection and exponent extraction into arithmetic.

#include <optional>
#include <vector>

#include "hoso/element.hpp"
#include "hoso/presentation.hpp"

namespace hoso {

/// Reduced periodicity data: power(x, p) == delta_power(q), p > 0,
/// gcd(p, |q|) == 1.  `factor` is the factor carrying the SSS witness simple;
/// empty for conjugates of pure D powers.
struct PeriodicInfo {
  long long p = 1;
  long long q = 0;
  std::optional<int> factor;

  friend bool operator==(const PeriodicInfo&, const PeriodicInfo&) = default;
};

std::optional<PeriodicInfo> periodicity(const Presentation& pres, const GarsideElement& x);

/// The center of the group: whole group when it is abelian (m = 1, l = 1 or
/// m = l = 2, single factor); otherwise the cyclic group generated by the
/// returned D power (the smallest positive central one).
struct CenterInfo {
  bool whole_group = false;
  GarsideElement generator;
};

CenterInfo center(const Presentation& pres);

/// Conjugacy-class representatives of the irreducible periodic elements:
/// s(0,m)^{+-1} and/or D^{+-1} per factor, deduplicated up to conjugacy.
std::vector<GarsideElement> irreducible_periodic_classes(const Presentation& pres);

/// Conjugacy test for two periodic elements (throws std::invalid_argument if
/// either is not periodic).  Periodic conjugates share reduced exponents and,
/// in a product presentation, a supporting factor.
bool periodic_conjugate(const Presentation& pres, const GarsideElement& x,
                        const GarsideElement& y);

}  // namespace hoso
