#pragma once

// Roots: if alpha^n = beta^n (n != 0), are alpha and beta conjugate?  For a
// single circular factor the answer is always yes.  In a product
// presentation the only escape is a pair of periodic roots supported on
// different factors (the a^n = b^n phenomenon), so the procedure returns
// either a verified conjugating witness or that periodic verdict.

#include <optional>

#include "hoso/element.hpp"
#include "hoso/presentation.hpp"

namespace hoso {

struct SamePowerOutcome {
  enum class Kind {
    conjugate,              // witness holds: conjugate(alpha, witness) == beta
    nonconjugate_periodic,  // both periodic, supported on different factors
    precondition_failed,    // alpha^n != beta^n
  };

  Kind kind = Kind::precondition_failed;
  std::optional<GarsideElement> witness;
};

/// Decides conjugacy of two n-th roots of the same element.  Non-periodic
/// roots go through their rigid SSS representatives: the n-th powers are
/// rigid and conjugate inside one SSS, a path of cycling/decycling/phi moves
/// connects them there, and replaying those moves on the root transports it
/// onto the other root (rigid roots of equal powers are equal).
SamePowerOutcome same_power_conjugate(const Presentation& pres, const GarsideElement& alpha,
                                      const GarsideElement& beta, long long n);

}  // namespace hoso
