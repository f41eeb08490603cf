// SPDX-License-Identifier: MIT
#pragma once

#include "hexp/poly.hpp"

#include <vector>

namespace hexp {

/// Formal power series sum c_i (z - center)^i, coefficients in extended
/// precision.
struct TaylorSeries {
    BigReal center;
    std::vector<BigReal> coeffs;

    TaylorSeries() : center(0L) {}
    TaylorSeries(BigReal a, std::vector<BigReal> c) : center(std::move(a)), coeffs(std::move(c)) {}
};

/// Rational function P(w)/Q(w) in w = z - center, Q(0) = 1.
struct RationalFunction {
    Poly num; // degree <= m
    Poly den; // degree <= n, constant term 1
    BigReal center;

    RationalFunction() : center(0L) {}

    BigReal eval(const BigReal& z) const;
    BigComplex eval(const BigComplex& z) const;
    std::complex<double> eval_d(const std::complex<double>& z) const;

    /// Taylor coefficients of P/Q at the center, orders 0..n_terms-1.
    std::vector<BigReal> taylor(int n_terms) const;
};

struct PartialFractions {
    Poly polynomial_part;       // in w = z - center
    std::vector<BigReal> poles; // locations in z, ascending
    std::vector<BigReal> residues;
};

/// [m/n] Pade approximant of the series (m >= n >= 0), built from the
/// Hankel linear system for the denominator and the convolution recursion
/// for the numerator. Raises ApproximantMissing when the system is singular.
RationalFunction pade(const TaylorSeries& series, int m, int n);

/// Partial-fraction decomposition of a rational function whose denominator
/// has only real simple roots. Residue at a simple pole is num/den'.
PartialFractions partial_fractions(const RationalFunction& r);

/// Re-sum a decomposition at a point (validation helper).
BigReal eval_partial_fractions(const PartialFractions& pf, const BigReal& center,
                               const BigReal& z);

struct InvarianceReport {
    BigReal max_deviation;
    int samples;
};

/// Checks that the [n/n] approximant commutes with the argument map
/// w = a z / (1 + b z): the [n/n] of g(w) := f(z) evaluated at w equals the
/// [n/n] of f at z, on a fan of sample points. Raises InvarianceViolation
/// when the deviation exceeds `tol`.
InvarianceReport check_invariance_rational_substitution(const TaylorSeries& f, int n,
                                                        const BigReal& a, const BigReal& b,
                                                        const BigReal& tol);

} // namespace hexp
