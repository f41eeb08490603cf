// SPDX-License-Identifier: MIT
#pragma once

#include "hexp/bigcomplex.hpp"
#include "hexp/bigreal.hpp"

#include <vector>

namespace hexp {

/// Dense polynomial, coefficients in ascending order of degree.
struct Poly {
    std::vector<BigReal> c;

    Poly() = default;
    explicit Poly(std::vector<BigReal> coeffs) : c(std::move(coeffs)) {}

    /// Index of the highest coefficient; -1 for the empty/zero vector.
    int degree() const;
    bool is_zero() const;

    BigReal eval(const BigReal& x) const;
    BigComplex eval(const BigComplex& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    Poly derivative() const;

    /// Largest coefficient magnitude (zero polynomial gives 0).
    BigReal max_abs_coeff() const;

    /// Drop trailing coefficients of magnitude below `tol` (absolute).
    Poly trimmed(const BigReal& tol) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const BigReal& s, const Poly& a);

    /// Polynomial division: returns {quotient, remainder} with
    /// deg(remainder) < deg(divisor). Divisor must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);
};

/// Gaussian elimination with partial pivoting in extended precision.
/// `matrix` is row-major n x n. Raises SingularMatrix when a pivot falls
/// below 10^(-p/2) relative to the largest initial entry (p = working
/// decimal digits of the inputs).
std::vector<BigReal> solve_dense(std::vector<std::vector<BigReal>> matrix,
                                 std::vector<BigReal> rhs);

/// All roots of `poly` in (lo, hi), each simple and real, sorted ascending,
/// accurate to 10^(20-p) * max(1, hi-lo) absolute. When `expected_count`
/// is >= 0 the search refines its scan until exactly that many roots are
/// bracketed, and raises RootCountMismatch on failure.
std::vector<BigReal> real_roots_in_interval(const Poly& poly, const BigReal& lo,
                                            const BigReal& hi, int expected_count = -1);

} // namespace hexp
