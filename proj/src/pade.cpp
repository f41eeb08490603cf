// SPDX-License-Identifier: MIT
#include "hexp/pade.hpp"

#include "hexp/errors.hpp"

#include <algorithm>

namespace hexp {

namespace {

BigReal den_scale_at(const Poly& den, const BigReal& aw) {
    // sum |b_l| |w|^l, the cancellation-free magnitude of Q(w)
    BigReal s(0L), wp(1L);
    for (const auto& b : den.c) {
        s += abs(b) * wp;
        wp *= aw;
    }
    return s;
}

} // namespace

BigReal RationalFunction::eval(const BigReal& z) const {
    BigReal w = z - center;
    BigReal q = den.eval(w);
    int p = default_digits();
    if (abs(q) <= BigReal::pow10(-(p / 2)) * den_scale_at(den, abs(w)))
        raise(ErrorKind::PoleEvaluation, "denominator vanishes at z = " + z.to_string(8));
    return num.eval(w) / q;
}

BigComplex RationalFunction::eval(const BigComplex& z) const {
    BigComplex w = z - BigComplex(center);
    BigComplex q = den.eval(w);
    int p = default_digits();
    if (abs(q) <= BigReal::pow10(-(p / 2)) * den_scale_at(den, abs(w)))
        raise(ErrorKind::PoleEvaluation, "denominator vanishes near a complex sample point");
    return num.eval(w) / q;
}

std::complex<double> RationalFunction::eval_d(const std::complex<double>& z) const {
    std::complex<double> w = z - std::complex<double>(center.to_double());
    return num.eval(w) / den.eval(w);
}

std::vector<BigReal> RationalFunction::taylor(int n_terms) const {
    // t_i from Q * t = P: t_i = a_i - sum_{l>=1} b_l t_{i-l}  (b_0 = 1)
    std::vector<BigReal> t(n_terms, BigReal(0L));
    for (int i = 0; i < n_terms; ++i) {
        BigReal acc = i < static_cast<int>(num.c.size()) ? num.c[i] : BigReal(0L);
        for (int l = 1; l < static_cast<int>(den.c.size()) && l <= i; ++l)
            acc -= den.c[l] * t[i - l];
        t[i] = acc / den.c[0];
    }
    return t;
}

RationalFunction pade(const TaylorSeries& series, int m, int n) {
    // m >= n for Laplace-exponent approximants; m = n-1 serves the
    // Stieltjes-series route behind the quadrature extraction.
    if (n < 0 || m < 0 || m < n - 1)
        raise(ErrorKind::InvalidArgument,
              "pade order must satisfy m >= n-1 >= -1, got m=" + std::to_string(m) +
                  " n=" + std::to_string(n));
    if (static_cast<int>(series.coeffs.size()) < m + n + 1)
        raise(ErrorKind::InvalidArgument,
              "series too short: need " + std::to_string(m + n + 1) + " coefficients, have " +
                  std::to_string(series.coeffs.size()));
    const auto& c = series.coeffs;
    auto coeff = [&c](int i) { return i >= 0 ? c[i] : BigReal(0L); };

    RationalFunction r;
    r.center = series.center;

    std::vector<BigReal> b(n + 1, BigReal(0L));
    b[0] = BigReal(1L);
    if (n > 0) {
        // Row i: sum_{l=1..n} c_{m+1+i-l} b_l = -c_{m+1+i}
        std::vector<std::vector<BigReal>> a(n, std::vector<BigReal>(n, BigReal(0L)));
        std::vector<BigReal> rhs(n, BigReal(0L));
        for (int i = 0; i < n; ++i) {
            for (int l = 1; l <= n; ++l) a[i][l - 1] = coeff(m + 1 + i - l);
            rhs[i] = -c[m + 1 + i];
        }
        try {
            auto x = solve_dense(std::move(a), std::move(rhs));
            for (int l = 1; l <= n; ++l) b[l] = x[l - 1];
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SingularMatrix)
                raise(ErrorKind::ApproximantMissing,
                      "the [" + std::to_string(m) + "/" + std::to_string(n) +
                          "] approximant does not exist (singular coefficient system)");
            throw;
        }
    }

    std::vector<BigReal> anum(m + 1, BigReal(0L));
    for (int i = 0; i <= m; ++i) {
        BigReal acc(0L);
        for (int l = 0; l <= std::min(i, n); ++l) acc += b[l] * c[i - l];
        anum[i] = acc;
    }
    r.num = Poly(std::move(anum));
    r.den = Poly(std::move(b));
    return r;
}

PartialFractions partial_fractions(const RationalFunction& r) {
    int p = default_digits();
    BigReal trim_tol = BigReal::pow10(-(p / 2)) * r.den.max_abs_coeff();
    Poly den = r.den.trimmed(trim_tol);
    int nd = den.degree();

    PartialFractions pf;
    auto [quo, rem] = Poly::divrem(r.num, den);
    pf.polynomial_part = quo;
    if (nd == 0) {
        pf.polynomial_part = (BigReal(1L) / den.c[0]) * r.num;
        return pf;
    }

    // Q(0) = 1, so every pole is nonzero; hunt the reciprocals t = 1/w as
    // roots of the reversed (monic) polynomial. The Cauchy bound in t stays
    // modest even when poles are far out.
    std::vector<BigReal> rev(nd + 1, BigReal(0L));
    for (int l = 0; l <= nd; ++l) rev[nd - l] = den.c[l];
    Poly rev_poly{rev};
    BigReal tbound(0L);
    for (int l = 1; l <= nd; ++l) tbound = max(tbound, abs(rev[nd - l]));
    tbound = tbound / abs(den.c[0]) + 1;
    std::vector<BigReal> roots_t = real_roots_in_interval(rev_poly, -tbound, tbound, nd);
    std::vector<BigReal> roots_w;
    roots_w.reserve(nd);
    for (const auto& t : roots_t) {
        if (t.is_zero())
            raise(ErrorKind::MultiplePole, "denominator root extraction hit a vanishing reciprocal");
        roots_w.push_back(BigReal(1L) / t);
    }
    std::sort(roots_w.begin(), roots_w.end());

    BigReal wscale(1L);
    for (const auto& w : roots_w) wscale = max(wscale, abs(w));
    BigReal sep = BigReal::pow10(-(p / 4)) * wscale;
    for (size_t i = 1; i < roots_w.size(); ++i)
        if (roots_w[i] - roots_w[i - 1] < sep)
            raise(ErrorKind::MultiplePole,
                  "coincident denominator roots near z = " + (roots_w[i] + r.center).to_string(8));

    Poly dden = den.derivative();
    for (const auto& w : roots_w) {
        pf.poles.push_back(w + r.center);
        pf.residues.push_back(rem.eval(w) / dden.eval(w));
    }
    return pf;
}

BigReal eval_partial_fractions(const PartialFractions& pf, const BigReal& center,
                               const BigReal& z) {
    BigReal acc = pf.polynomial_part.eval(z - center);
    for (size_t i = 0; i < pf.poles.size(); ++i) acc += pf.residues[i] / (z - pf.poles[i]);
    return acc;
}

namespace {

/// Series of g(w) := f(z(w)) where z(w) = w / (a - b w), i.e. the inverse of
/// w = a z / (1 + b z). Truncated composition at `n_terms` coefficients.
std::vector<BigReal> compose_inverse_map(const std::vector<BigReal>& f, const BigReal& a,
                                         const BigReal& b, int n_terms) {
    // z(w) = (w/a) * sum_{j>=0} (b/a)^j w^j
    std::vector<BigReal> zw(n_terms, BigReal(0L));
    BigReal ratio = b / a, cur = BigReal(1L) / a;
    for (int j = 1; j < n_terms; ++j) {
        zw[j] = cur;
        cur *= ratio;
    }
    // Horner composition over truncated series.
    std::vector<BigReal> acc(n_terms, BigReal(0L));
    for (int i = n_terms - 1; i >= 0; --i) {
        // acc = acc * zw + f_i
        std::vector<BigReal> next(n_terms, BigReal(0L));
        for (int u = 0; u < n_terms; ++u) {
            if (acc[u].is_zero()) continue;
            for (int v = 0; u + v < n_terms; ++v) {
                if (zw[v].is_zero()) continue;
                next[u + v] += acc[u] * zw[v];
            }
        }
        next[0] += f[i];
        acc = std::move(next);
    }
    return acc;
}

} // namespace

InvarianceReport check_invariance_rational_substitution(const TaylorSeries& f, int n,
                                                        const BigReal& a, const BigReal& b,
                                                        const BigReal& tol) {
    if (a.is_zero()) raise(ErrorKind::InvalidArgument, "map parameter a must be nonzero");
    int need = 2 * n + 1;
    if (static_cast<int>(f.coeffs.size()) < need)
        raise(ErrorKind::InvalidArgument, "series too short for the [n/n] comparison");

    TaylorSeries g(BigReal(0L), compose_inverse_map(f.coeffs, a, b, need));
    RationalFunction fn = pade(f, n, n);
    RationalFunction gn = pade(g, n, n);

    InvarianceReport rep{BigReal(0L), 0};
    for (int t = 1; t <= 8; ++t) {
        BigReal z = BigReal::from_ratio(t, 40); // small fan keeps both sides in-range
        BigReal w = a * z / (b * z + 1);
        BigReal dev = abs(fn.eval(z) - gn.eval(w));
        rep.max_deviation = max(rep.max_deviation, dev);
        ++rep.samples;
    }
    if (rep.max_deviation > tol)
        raise(ErrorKind::InvarianceViolation,
              "max deviation " + rep.max_deviation.to_string(6) + " exceeds tolerance " +
                  tol.to_string(3));
    return rep;
}

} // namespace hexp
