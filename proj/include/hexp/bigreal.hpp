// SPDX-License-Identifier: MIT
#pragma once

#include <mpfr.h>

#include <atomic>
#include <string>
#include <utility>

namespace hexp {

/// Process-wide default working precision in decimal digits.
/// Values remember the precision they were created with; results of binary
/// operations carry the larger of the operand precisions.
int default_digits();
void set_default_digits(int digits);

/// RAII guard for temporarily switching the default precision.
class PrecisionGuard {
public:
    explicit PrecisionGuard(int digits) : saved_(default_digits()) { set_default_digits(digits); }
    ~PrecisionGuard() { set_default_digits(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    int saved_;
};

/// Arbitrary-precision real number (MPFR-backed, round-to-nearest-even).
/// Carries 64 guard bits beyond the requested decimal digits.
class BigReal {
public:
    BigReal();
    explicit BigReal(long v, int digits = 0);
    explicit BigReal(int v, int digits = 0);
    explicit BigReal(double v, int digits = 0);
    explicit BigReal(const std::string& decimal, int digits = 0);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    /// Decimal digits this value was created for (guard bits excluded).
    int digits() const;
    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_signbit(v_) != 0 && !is_zero(); }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// Scientific-notation string with `sig_digits` significant digits,
    /// round-half-even. `sig_digits <= 0` means full working precision.
    std::string to_string(int sig_digits = 0) const;

    BigReal operator-() const;

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator+=(long o) { return *this = *this + o; }
    BigReal& operator-=(long o) { return *this = *this - o; }
    BigReal& operator*=(long o) { return *this = *this * o; }
    BigReal& operator/=(long o) { return *this = *this / o; }

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);

    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator+(long a, const BigReal& b) { return b + a; }
    friend BigReal operator*(long a, const BigReal& b) { return b * a; }
    friend BigReal operator-(long a, const BigReal& b);
    friend BigReal operator/(long a, const BigReal& b);

    friend int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return cmp(a, b) != 0; }

    friend BigReal abs(const BigReal& a);
    friend BigReal sqrt(const BigReal& a);
    friend BigReal exp(const BigReal& a);
    friend BigReal log(const BigReal& a);
    friend BigReal sin(const BigReal& a);
    friend BigReal cos(const BigReal& a);
    friend BigReal atan(const BigReal& a);
    friend BigReal atan2(const BigReal& y, const BigReal& x);
    /// x^y for real y (x > 0, or x == 0 with y > 0).
    friend BigReal pow(const BigReal& x, const BigReal& y);
    friend BigReal pow(const BigReal& x, long n);
    /// Gamma function, defined for non-pole real arguments (negative
    /// non-integers included).
    friend BigReal tgamma(const BigReal& x);
    friend BigReal floor(const BigReal& x);

    friend BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }
    friend BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }

    static BigReal pi(int digits = 0);
    /// 10^e at the given working precision.
    static BigReal pow10(long e, int digits = 0);
    static BigReal from_ratio(long num, long den, int digits = 0);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    explicit BigReal(mpfr_prec_t bits, bool);
    mpfr_t v_;
};

} // namespace hexp
