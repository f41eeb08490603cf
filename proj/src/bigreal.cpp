// SPDX-License-Identifier: MIT
#include "hexp/bigreal.hpp"

#include "hexp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace hexp {

namespace {

std::atomic<int> g_default_digits{200};

constexpr mpfr_prec_t kGuardBits = 64;
constexpr double kLog2Of10 = 3.321928094887362;

mpfr_prec_t bits_for_digits(int digits) {
    if (digits <= 0) digits = g_default_digits.load(std::memory_order_relaxed);
    return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + kGuardBits;
}

} // namespace

int default_digits() { return g_default_digits.load(std::memory_order_relaxed); }

void set_default_digits(int digits) {
    if (digits < 1) raise(ErrorKind::InvalidArgument, "precision must be a positive digit count");
    g_default_digits.store(digits, std::memory_order_relaxed);
}

BigReal::BigReal(mpfr_prec_t bits, bool) { mpfr_init2(v_, bits); }

BigReal::BigReal() { mpfr_init2(v_, bits_for_digits(0)); mpfr_set_zero(v_, 1); }

BigReal::BigReal(long v, int digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(int v, int digits) : BigReal(static_cast<long>(v), digits) {}

BigReal::BigReal(double v, int digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal, int digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        raise(ErrorKind::InvalidArgument, "unparseable decimal literal '" + decimal + "'");
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

int BigReal::digits() const {
    return static_cast<int>((mpfr_get_prec(v_) - kGuardBits) / kLog2Of10);
}

std::string BigReal::to_string(int sig_digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    size_t nd = sig_digits > 0 ? static_cast<size_t>(sig_digits) : 0;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, nd, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    if (d.empty()) d = "0";
    bool zero = d.find_first_not_of('0') == std::string::npos;
    std::string out = neg ? "-" : "";
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += "e";
    long e10 = zero ? 0 : static_cast<long>(e) - 1;
    out += (e10 >= 0 ? "+" : "") + std::to_string(e10);
    return out;
}

BigReal BigReal::operator-() const {
    BigReal r(mpfr_get_prec(v_), true);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {
mpfr_prec_t join(const BigReal& a, const BigReal& b) {
    return std::max(a.prec_bits(), b.prec_bits());
}
} // namespace

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b), true);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b), true);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b), true);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b), true);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.prec_bits(), true);
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.prec_bits(), true);
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.prec_bits(), true);
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.prec_bits(), true);
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.prec_bits(), true);
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator/(long a, const BigReal& b) {
    BigReal r(b.prec_bits(), true);
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

#define HEXP_UNARY(name, mpfr_fn)                  \
    BigReal name(const BigReal& a) {               \
        BigReal r(a.prec_bits(), true);            \
        mpfr_fn(r.v_, a.v_, MPFR_RNDN);            \
        return r;                                  \
    }

HEXP_UNARY(abs, mpfr_abs)
HEXP_UNARY(sqrt, mpfr_sqrt)
HEXP_UNARY(exp, mpfr_exp)
HEXP_UNARY(log, mpfr_log)
HEXP_UNARY(sin, mpfr_sin)
HEXP_UNARY(cos, mpfr_cos)
HEXP_UNARY(atan, mpfr_atan)
HEXP_UNARY(tgamma, mpfr_gamma)

#undef HEXP_UNARY

BigReal floor(const BigReal& x) {
    BigReal r(x.prec_bits(), true);
    mpfr_floor(r.v_, x.v_);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(std::max(y.prec_bits(), x.prec_bits()), true);
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal r(std::max(x.prec_bits(), y.prec_bits()), true);
    mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, long n) {
    BigReal r(x.prec_bits(), true);
    mpfr_pow_si(r.v_, x.v_, n, MPFR_RNDN);
    return r;
}

BigReal BigReal::pi(int digits) {
    BigReal r(bits_for_digits(digits), true);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow10(long e, int digits) {
    BigReal r(bits_for_digits(digits), true);
    mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_ratio(long num, long den, int digits) {
    BigReal r(bits_for_digits(digits), true);
    mpfr_set_si(r.v_, num, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
    return r;
}

} // namespace hexp
