// SPDX-License-Identifier: MIT
#pragma once

#include "hexp/bigreal.hpp"

#include <complex>

namespace hexp {

/// Complex number over BigReal. Principal branches throughout.
struct BigComplex {
    BigReal re, im;

    BigComplex() = default;
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(BigReal r) : re(std::move(r)), im() {}
    explicit BigComplex(long r) : re(r), im() {}

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    BigComplex operator-() const { return {-re, -im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigReal& s, const BigComplex& b) {
        return {s * b.re, s * b.im};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
    friend BigReal abs(const BigComplex& a) { return sqrt(a.re * a.re + a.im * a.im); }

    friend BigComplex exp(const BigComplex& a) {
        BigReal m = exp(a.re);
        return {m * cos(a.im), m * sin(a.im)};
    }
    friend BigComplex log(const BigComplex& a) {
        return {log(a.re * a.re + a.im * a.im) / 2, atan2(a.im, a.re)};
    }
    friend BigComplex sqrt(const BigComplex& a) {
        if (a.im.is_zero() && a.re.sign() >= 0) return BigComplex(sqrt(a.re));
        BigReal m = abs(a);
        BigReal u = sqrt((m + a.re) / 2);
        BigReal v = sqrt((m - a.re) / 2);
        if (a.im.sign() < 0) v = -v;
        return {u, v};
    }
    friend BigComplex pow(const BigComplex& a, const BigReal& y) {
        if (a.im.is_zero() && a.re.sign() > 0) return BigComplex(pow(a.re, y));
        return exp(BigComplex(y) * log(a));
    }
};

} // namespace hexp
