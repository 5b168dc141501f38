#pragma once

#include <span>
#include <string>
#include <vector>

#include "ukd/errors.hpp"

namespace ukd {

/// Integer coefficients, constant term first, no trailing zeros (the zero
/// polynomial is empty).
using Polynomial = std::vector<BigInt>;

Polynomial trimmed(Polynomial p);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
std::string to_string(const Polynomial& p);

/// numerator / denominator in lowest terms with denominator(0) = 1.
struct RationalGF {
  Polynomial numerator;
  Polynomial denominator;

  /// First `terms` power-series coefficients.
  std::vector<BigInt> expand(std::size_t terms) const;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Cancels the common factor and normalises the denominator's constant term
/// to 1. Throws InvalidInput if the denominator vanishes at 0, FitFailure if
/// the reduced form is not integral.
RationalGF reduce(const Polynomial& numerator, const Polynomial& denominator);

/// Smallest rational function reproducing `terms`, found as the minimal
/// linear recurrence (Berlekamp-Massey over Q). Requires
/// terms.size() >= 2 * degree_bound, enough for the recurrence to be unique;
/// throws FitFailure if its order exceeds degree_bound or the result does
/// not reproduce every term.
RationalGF fit_rational_gf(std::span<const BigInt> terms, int degree_bound);

/// (1 - 2x + 2x^2 + x^3 - x^5 + x^6) / ((1 - x - x^3)(1 - x)^2), the known
/// closed form for k = 3.
RationalGF gf_reference_k3();

}  // namespace ukd
