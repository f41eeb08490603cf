// SPDX-License-Identifier: MIT
#include "hexp/quadrature.hpp"

#include "hexp/errors.hpp"

#include <algorithm>

namespace hexp {

BigReal QuadratureRule::moment(int k) const {
    BigReal s(0L);
    for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * pow(nodes[i], static_cast<long>(k));
    return s;
}

namespace {

/// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for real a, integer k.
BigReal binom(const BigReal& a, long k) {
    BigReal r(1L);
    for (long t = 0; t < k; ++t) r *= (a - t) / (t + 1);
    return r;
}

void validate(const JacobiParams& p) {
    if (!(p.alpha > BigReal(-1L)) || !(p.beta > BigReal(-1L)))
        raise(ErrorKind::InvalidArgument, "Jacobi parameters require alpha, beta > -1");
    if (p.degree < 0) raise(ErrorKind::InvalidArgument, "negative Jacobi degree");
}

} // namespace

BigReal jacobi_eval(const JacobiParams& p, const BigReal& x) {
    validate(p);
    long n = p.degree;
    BigReal half = (x - 1) / 2;
    BigReal acc(0L);
    for (long j = 0; j <= n; ++j)
        acc += binom(p.alpha + n, n - j) * binom(p.alpha + p.beta + n + j, j) * pow(half, j);
    return acc;
}

Poly jacobi_poly(const JacobiParams& p) {
    validate(p);
    long n = p.degree;
    std::vector<BigReal> coeffs(n + 1, BigReal(0L));
    // accumulate C_j * ((x-1)/2)^j expanded in the monomial basis
    std::vector<BigReal> power{BigReal(1L)}; // ((x-1)/2)^j
    for (long j = 0; j <= n; ++j) {
        BigReal cj = binom(p.alpha + n, n - j) * binom(p.alpha + p.beta + n + j, j);
        for (size_t t = 0; t < power.size(); ++t) coeffs[t] += cj * power[t];
        if (j < n) {
            // multiply by (x-1)/2
            std::vector<BigReal> next(power.size() + 1, BigReal(0L));
            for (size_t t = 0; t < power.size(); ++t) {
                next[t + 1] += power[t] / 2;
                next[t] -= power[t] / 2;
            }
            power = std::move(next);
        }
    }
    return Poly(std::move(coeffs));
}

std::vector<BigReal> jacobi_roots(const JacobiParams& p) {
    validate(p);
    if (p.degree < 1) raise(ErrorKind::InvalidArgument, "jacobi_roots needs degree >= 1");
    Poly poly = jacobi_poly(p);
    return real_roots_in_interval(poly, BigReal(-1L), BigReal(1L), p.degree);
}

BigReal jacobi_norm(const JacobiParams& p) {
    validate(p);
    long n = p.degree;
    BigReal apb = p.alpha + p.beta;
    BigReal num = tgamma(p.alpha + (n + 1)) * tgamma(p.beta + (n + 1));
    BigReal den = tgamma(apb + (n + 1));
    BigReal nfact(1L);
    for (long t = 2; t <= n; ++t) nfact *= t;
    return pow(BigReal(2L), apb + 1) / (apb + (2 * n + 1)) * num / (den * nfact);
}

QuadratureRule gauss_jacobi(const JacobiParams& p) {
    validate(p);
    int n = p.degree;
    if (n < 1) raise(ErrorKind::InvalidArgument, "quadrature order must be >= 1");

    QuadratureRule rule;
    rule.order = n;
    rule.lo = BigReal(-1L);
    rule.hi = BigReal(1L);
    rule.nodes = jacobi_roots(p);
    rule.zero_node.assign(n, false);

    JacobiParams prev{p.alpha, p.beta, n - 1};
    Poly pn = jacobi_poly(p);
    Poly pn1 = n >= 1 ? jacobi_poly(prev) : Poly(std::vector<BigReal>{BigReal(1L)});
    Poly dpn = pn.derivative();
    // leading coefficient of P_k is C(alpha+beta+2k, k) / 2^k
    BigReal lead_n = binom(p.alpha + p.beta + 2 * n, n) / pow(BigReal(2L), static_cast<long>(n));
    BigReal lead_n1 =
        binom(p.alpha + p.beta + 2 * (n - 1), n - 1) / pow(BigReal(2L), static_cast<long>(n - 1));
    BigReal hn1 = jacobi_norm(prev);

    rule.weights.reserve(n);
    for (const auto& x : rule.nodes) {
        BigReal w = (lead_n / lead_n1) * hn1 / (pn1.eval(x) * dpn.eval(x));
        if (!(w > BigReal(0L)))
            raise(ErrorKind::NotAStieltjesSequence,
                  "non-positive Gauss-Jacobi weight at node " + x.to_string(8));
        rule.weights.push_back(w);
    }
    return rule;
}

QuadratureRule gauss_from_moments(const std::vector<BigReal>& moments, const BigReal& lo,
                                  const BigReal& hi) {
    if (moments.empty() || moments.size() % 2 != 0)
        raise(ErrorKind::InvalidArgument, "need an even number of moments m_0..m_{2n-1}");
    if (!(lo < hi)) raise(ErrorKind::InvalidArgument, "empty support interval");
    const int n = static_cast<int>(moments.size()) / 2;
    int p = default_digits();
    for (const auto& m : moments) p = std::min(p, m.digits());

    // Stieltjes series of f(z) = int nu(dx)/(1+xz): coefficients (-1)^j m_j.
    std::vector<BigReal> c(moments.size());
    for (size_t j = 0; j < moments.size(); ++j) c[j] = (j % 2 == 0) ? moments[j] : -moments[j];

    RationalFunction f;
    try {
        f = pade(TaylorSeries(BigReal(0L), std::move(c)), n - 1, n);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ApproximantMissing)
            raise(ErrorKind::NotAStieltjesSequence,
                  "singular moment system: the input is not a positive measure with " +
                      std::to_string(n) + " support points at this precision");
        throw;
    }

    // Q(z) = prod(1 + x_i z): nodes are roots of the reversed polynomial
    // N(x) = sum_l (-1)^l b_l x^{n-l}, monic, with x = 0 iff b_n == 0.
    BigReal trim_tol = BigReal::pow10(-(p / 2)) * f.den.max_abs_coeff();
    std::vector<BigReal> node_coeffs(n + 1, BigReal(0L));
    for (int l = 0; l <= n; ++l) {
        BigReal bl = l < static_cast<int>(f.den.c.size()) ? f.den.c[l] : BigReal(0L);
        if (abs(bl) <= trim_tol) bl = BigReal(0L);
        node_coeffs[n - l] = (l % 2 == 0) ? bl : -bl;
    }
    bool has_zero_node = node_coeffs[0].is_zero();
    Poly node_poly{node_coeffs};
    if (has_zero_node) // factor out the exact root at zero
        node_poly = Poly(std::vector<BigReal>(node_coeffs.begin() + 1, node_coeffs.end()));

    BigReal span = hi - lo;
    BigReal margin = span / 8 + BigReal::pow10(-(p / 4));
    std::vector<BigReal> roots;
    try {
        roots = real_roots_in_interval(node_poly, lo - margin, hi + margin,
                                       has_zero_node ? n - 1 : n);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::RootCountMismatch)
            raise(ErrorKind::NotAStieltjesSequence,
                  std::string("node extraction failed (complex or far-escaping nodes): ") +
                      e.what());
        throw;
    }
    // A zero node appears as a root of the full polynomial only via the
    // trimmed constant term; re-insert it explicitly.
    if (has_zero_node) {
        if (!(lo < BigReal(0L)) || !(hi > BigReal(0L)))
            raise(ErrorKind::NotAStieltjesSequence, "zero node outside the support interval");
        roots.push_back(BigReal(0L));
        std::sort(roots.begin(), roots.end());
    }

    BigReal place_tol = BigReal::pow10(-(p / 4)) * max(BigReal(1L), span);
    for (const auto& x : roots)
        if (x < lo - place_tol || x > hi + place_tol)
            raise(ErrorKind::NotAStieltjesSequence,
                  "node " + x.to_string(8) + " escapes the support interval (" + lo.to_string(6) +
                      ", " + hi.to_string(6) + ")");

    QuadratureRule rule;
    rule.order = n;
    rule.lo = lo;
    rule.hi = hi;
    rule.nodes = roots;
    rule.zero_node.assign(n, false);

    // w_i = x_i * P(z_i)/Q'(z_i) at the pole z_i = -1/x_i; the zero-node
    // weight is fixed by zeroth-moment exactness.
    Poly dden = f.den.derivative();
    std::vector<BigReal> weights(n, BigReal(0L));
    BigReal wsum(0L);
    int zero_idx = -1;
    for (int i = 0; i < n; ++i) {
        if (rule.nodes[i].is_zero()) {
            zero_idx = i;
            rule.zero_node[i] = true;
            continue;
        }
        BigReal z = BigReal(-1L) / rule.nodes[i];
        weights[i] = rule.nodes[i] * f.num.eval(z) / dden.eval(z);
        wsum += weights[i];
    }
    if (zero_idx >= 0) weights[zero_idx] = moments[0] - wsum;
    for (const auto& w : weights)
        if (!(w > BigReal(0L)))
            raise(ErrorKind::NotAStieltjesSequence,
                  "non-positive extracted weight " + w.to_string(6));
    rule.weights = std::move(weights);
    return rule;
}

} // namespace hexp
