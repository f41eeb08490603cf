// SPDX-License-Identifier: MIT
#include "hexp/poly.hpp"

#include "hexp/errors.hpp"

#include <algorithm>

namespace hexp {

int Poly::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (!c[i].is_zero()) return i;
    return -1;
}

bool Poly::is_zero() const { return degree() < 0; }

BigReal Poly::eval(const BigReal& x) const {
    if (c.empty()) return BigReal(0L);
    BigReal acc = c.back();
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) acc = acc * x + c[i];
    return acc;
}

BigComplex Poly::eval(const BigComplex& x) const {
    if (c.empty()) return BigComplex(0L);
    BigComplex acc(c.back());
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i)
        acc = acc * x + BigComplex(c[i]);
    return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
    if (c.empty()) return {0.0, 0.0};
    std::complex<double> acc(c.back().to_double());
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i)
        acc = acc * x + c[i].to_double();
    return acc;
}

Poly Poly::derivative() const {
    if (c.size() <= 1) return Poly{};
    std::vector<BigReal> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

BigReal Poly::max_abs_coeff() const {
    BigReal m(0L);
    for (const auto& a : c) m = max(m, abs(a));
    return m;
}

Poly Poly::trimmed(const BigReal& tol) const {
    int d = static_cast<int>(c.size()) - 1;
    while (d >= 0 && abs(c[d]) <= tol) --d;
    return Poly(std::vector<BigReal>(c.begin(), c.begin() + (d + 1)));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<BigReal> r(std::max(a.c.size(), b.c.size()), BigReal(0L));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<BigReal> r(std::max(a.c.size(), b.c.size()), BigReal(0L));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return Poly{};
    std::vector<BigReal> r(a.c.size() + b.c.size() - 1, BigReal(0L));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
}

Poly operator*(const BigReal& s, const Poly& a) {
    std::vector<BigReal> r(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = s * a.c[i];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& den) {
    int dd = den.degree();
    if (dd < 0) raise(ErrorKind::InvalidArgument, "division by the zero polynomial");
    int dn = num.degree();
    if (dn < dd) return {Poly{}, num};
    std::vector<BigReal> rem(num.c.begin(), num.c.begin() + (dn + 1));
    std::vector<BigReal> quo(dn - dd + 1, BigReal(0L));
    for (int i = dn; i >= dd; --i) {
        BigReal f = rem[i] / den.c[dd];
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.c[j];
    }
    rem.resize(dd);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::vector<BigReal> solve_dense(std::vector<std::vector<BigReal>> a, std::vector<BigReal> b) {
    const size_t n = a.size();
    if (n == 0) raise(ErrorKind::InvalidArgument, "empty system");
    if (b.size() != n) raise(ErrorKind::InvalidArgument, "rhs size does not match matrix");
    int p = default_digits();
    BigReal scale(0L);
    for (const auto& row : a) {
        if (row.size() != n) raise(ErrorKind::InvalidArgument, "matrix is not square");
        for (const auto& x : row) {
            scale = max(scale, abs(x));
            p = std::min(p, x.digits());
        }
    }
    if (scale.is_zero()) raise(ErrorKind::SingularMatrix, "zero matrix");
    BigReal pivot_floor = BigReal::pow10(-(p / 2)) * scale;

    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (abs(a[i][k]) > abs(a[piv][k])) piv = i;
        if (abs(a[piv][k]) < pivot_floor)
            raise(ErrorKind::SingularMatrix,
                  "pivot magnitude " + abs(a[piv][k]).to_string(3) + " below threshold at column " +
                      std::to_string(k));
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(b[piv], b[k]);
        }
        for (size_t i = k + 1; i < n; ++i) {
            BigReal f = a[i][k] / a[k][k];
            if (f.is_zero()) continue;
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<BigReal> x(n, BigReal(0L));
    for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
        BigReal s = b[i];
        for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

namespace {

/// Safeguarded Newton inside a sign-change bracket [a, b]. A Newton step
/// below `tol` means the iterate sits within tol of a simple root, whatever
/// the bracket width still is.
BigReal polish_root(const Poly& f, const Poly& df, BigReal a, BigReal b, const BigReal& tol) {
    int sa = f.eval(a).sign();
    BigReal x = (a + b) / 2;
    for (int iter = 0; iter < 400; ++iter) {
        BigReal fx = f.eval(x);
        if (fx.is_zero()) return x;
        if (fx.sign() == sa) a = x; else b = x;
        BigReal d = df.eval(x);
        BigReal nx;
        if (!d.is_zero()) {
            BigReal step = fx / d;
            if (abs(step) < tol) return x - step;
            nx = x - step;
            if (!(nx > a && nx < b)) nx = (a + b) / 2;
        } else {
            nx = (a + b) / 2;
        }
        if (abs(nx - x) < tol) return nx;
        x = nx;
    }
    return x;
}

} // namespace

std::vector<BigReal> real_roots_in_interval(const Poly& poly, const BigReal& lo, const BigReal& hi,
                                            int expected_count) {
    if (poly.is_zero()) raise(ErrorKind::InvalidArgument, "zero polynomial has no isolated roots");
    if (!(lo < hi)) raise(ErrorKind::InvalidArgument, "empty root-search interval");
    int deg = poly.degree();
    int p = default_digits();
    for (const auto& cc : poly.c) p = std::min(p, cc.digits());
    BigReal span = hi - lo;
    BigReal tol = BigReal::pow10(20 - p) * max(BigReal(1L), span);
    Poly df = poly.derivative();

    int grid = std::max(64, 16 * (deg + 1));
    for (int attempt = 0;; ++attempt) {
        // Merged Chebyshev + uniform scan: the Chebyshev points match the
        // endpoint clustering of orthogonal-polynomial roots, the uniform
        // points keep interior clusters from slipping through.
        BigReal mid = (lo + hi) / 2, half = span / 2;
        BigReal pi = BigReal::pi();
        std::vector<BigReal> xs;
        xs.reserve(2 * grid + 2);
        for (int i = 0; i <= grid; ++i) {
            xs.push_back(mid - half * cos(pi * BigReal::from_ratio(i, grid)));
            if (i > 0 && i < grid) xs.push_back(lo + span * BigReal::from_ratio(i, grid));
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        xs.front() = lo;
        xs.back() = hi;

        std::vector<BigReal> roots;
        BigReal prev_val = poly.eval(xs[0]);
        for (size_t i = 1; i < xs.size(); ++i) {
            BigReal val = poly.eval(xs[i]);
            if (val.is_zero()) {
                // exact root at an interior grid point
                if (i + 1 < xs.size()) roots.push_back(xs[i]);
            } else if (!prev_val.is_zero() && val.sign() != prev_val.sign()) {
                roots.push_back(polish_root(poly, df, xs[i - 1], xs[i], tol));
            }
            prev_val = val;
        }

        bool count_ok = expected_count < 0 || static_cast<int>(roots.size()) == expected_count;
        if (count_ok) {
            std::sort(roots.begin(), roots.end());
            BigReal sep = BigReal::pow10(-(p / 4)) * max(BigReal(1L), span);
            for (size_t i = 1; i < roots.size(); ++i)
                if (roots[i] - roots[i - 1] < sep)
                    raise(ErrorKind::RootCountMismatch,
                          "roots closer than the separation tolerance near " +
                              roots[i].to_string(6));
            return roots;
        }
        if (attempt >= 3)
            raise(ErrorKind::RootCountMismatch,
                  "found " + std::to_string(roots.size()) + " roots, expected " +
                      std::to_string(expected_count) + " in (" + lo.to_string(6) + ", " +
                      hi.to_string(6) + ")");
        grid *= 4;
    }
}

} // namespace hexp
