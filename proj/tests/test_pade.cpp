// SPDX-License-Identifier: MIT
#include "hexp/errors.hpp"
#include "hexp/pade.hpp"

#include <doctest.h>

using namespace hexp;

namespace {

BigReal tol10(int e) { return BigReal::pow10(e); }

/// -log(1-z) = sum z^i / i
TaylorSeries log_series(int n_terms) {
    std::vector<BigReal> c(n_terms, BigReal(0L));
    for (int i = 1; i < n_terms; ++i) c[i] = BigReal::from_ratio(1, i);
    return TaylorSeries(BigReal(0L), std::move(c));
}

} // namespace

TEST_CASE("[1/1] of -log(1-z) is z/(1 - z/2)") {
    auto r = pade(log_series(3), 1, 1);
    REQUIRE(r.num.c.size() == 2);
    REQUIRE(r.den.c.size() == 2);
    CHECK(abs(r.num.c[0]) < tol10(-150));
    CHECK(abs(r.num.c[1] - 1L) < tol10(-150));
    CHECK(abs(r.den.c[0] - 1L) < tol10(-150));
    CHECK(abs(r.den.c[1] + BigReal(1L) / 2L) < tol10(-150));
}

TEST_CASE("[0/0] is the constant c_0") {
    std::vector<BigReal> c{BigReal(7L), BigReal(9L)};
    auto r = pade(TaylorSeries(BigReal(0L), c), 0, 0);
    CHECK(abs(r.eval(BigReal(123L)) - 7L) < tol10(-150));
}

TEST_CASE("[n/n] denominator of the log series matches 1 - z/2 at n=1") {
    auto r = pade(log_series(3), 1, 1);
    CHECK(abs(r.den.eval(BigReal(1L)) - BigReal(1L) / 2L) < tol10(-150));
}

TEST_CASE("rational evaluation") {
    auto r = pade(log_series(3), 1, 1);
    CHECK(abs(r.eval(BigReal(1L)) - 2L) < tol10(-150));     // z/(1-z/2) at 1
    CHECK(abs(r.eval(BigReal(0L))) < tol10(-150));          // center value c_0
    CHECK_THROWS_AS(r.eval(BigReal(2L)), Error);            // pole at z = 2
}

TEST_CASE("order condition holds for [m/n] of the log series") {
    int p = default_digits();
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {5, 2}, {6, 0}}) {
        auto s = log_series(m + n + 1);
        auto r = pade(s, m, n);
        auto t = r.taylor(m + n + 1);
        for (int i = 0; i <= m + n; ++i) CHECK(abs(t[i] - s.coeffs[i]) <= tol10(30 - p));
    }
}

TEST_CASE("partial fractions: 2z/(2-z) = -2 - 4/(z-2)") {
    RationalFunction r;
    r.center = BigReal(0L);
    // 2z/(2-z) normalized to constant denominator term 1: z/(1 - z/2)
    r.num = Poly(std::vector<BigReal>{BigReal(0L), BigReal(1L)});
    r.den = Poly(std::vector<BigReal>{BigReal(1L), -BigReal(1L) / 2L});
    auto pf = partial_fractions(r);
    REQUIRE(pf.poles.size() == 1);
    CHECK(abs(pf.poles[0] - 2L) < tol10(-150));
    CHECK(abs(pf.residues[0] + 4L) < tol10(-150));
    REQUIRE(pf.polynomial_part.c.size() >= 1);
    CHECK(abs(pf.polynomial_part.c[0] + 2L) < tol10(-150));
}

TEST_CASE("partial fractions of a constant has no poles") {
    RationalFunction r;
    r.center = BigReal(0L);
    r.num = Poly(std::vector<BigReal>{BigReal(5L)});
    r.den = Poly(std::vector<BigReal>{BigReal(1L)});
    auto pf = partial_fractions(r);
    CHECK(pf.poles.empty());
    CHECK(abs(pf.polynomial_part.eval(BigReal(7L)) - 5L) < tol10(-150));
}

TEST_CASE("partial fractions re-sum to the rational function") {
    int p = default_digits();
    auto r = pade(log_series(9), 4, 4);
    auto pf = partial_fractions(r);
    REQUIRE(pf.poles.size() == 4);
    for (int t = 1; t <= 20; ++t) {
        BigReal z = BigReal::from_ratio(2 * t - 21, 25);
        BigReal direct = r.eval(z);
        BigReal summed = eval_partial_fractions(pf, r.center, z);
        CHECK(abs(direct - summed) <= tol10(20 - p) * max(BigReal(1L), abs(direct)));
    }
}

TEST_CASE("Stieltjes [n-1/n] has simple poles on the negative axis with positive residues") {
    // moments of Lebesgue measure on (0,1): m_j = 1/(j+1); series (-z)^j m_j
    for (int n : {2, 4, 6}) {
        std::vector<BigReal> c(2 * n, BigReal(0L));
        for (int j = 0; j < 2 * n; ++j)
            c[j] = (j % 2 == 0 ? BigReal(1L) : BigReal(-1L)) / (j + 1);
        auto r = pade(TaylorSeries(BigReal(0L), std::move(c)), n - 1, n);
        auto pf = partial_fractions(r);
        REQUIRE(static_cast<int>(pf.poles.size()) == n);
        for (size_t i = 0; i < pf.poles.size(); ++i) {
            CHECK(pf.poles[i] < BigReal(0L));
            CHECK(pf.residues[i] > BigReal(0L));
        }
        CHECK(pf.polynomial_part.degree() <= 0);
    }
}

TEST_CASE("two coincident poles are rejected") {
    RationalFunction r;
    r.center = BigReal(0L);
    r.num = Poly(std::vector<BigReal>{BigReal(1L)});
    // (1 - z/3)^2 = 1 - 2z/3 + z^2/9
    r.den = Poly(std::vector<BigReal>{BigReal(1L), BigReal(-2L) / 3L, BigReal(1L) / 9L});
    try {
        partial_fractions(r);
        FAIL("expected MultiplePole or RootCountMismatch");
    } catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::MultiplePole || e.kind() == ErrorKind::RootCountMismatch));
    }
}

TEST_CASE("degenerate Hankel system reports a missing approximant") {
    // geometric series 1/(1-z): every [m/n] with n >= 2 has a singular system
    std::vector<BigReal> c(6, BigReal(1L));
    try {
        pade(TaylorSeries(BigReal(0L), c), 2, 2);
        FAIL("expected ApproximantMissing");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ApproximantMissing);
    }
}

TEST_CASE("[n/n] invariance under the argument map w = az/(1+bz)") {
    int p = default_digits();
    SUBCASE("identity map is exact") {
        auto rep = check_invariance_rational_substitution(log_series(7), 3, BigReal(1L),
                                                          BigReal(0L), tol10(30 - p));
        CHECK(rep.max_deviation <= tol10(30 - p));
    }
    SUBCASE("a=1, b=1/2 at n=2") {
        auto rep = check_invariance_rational_substitution(log_series(5), 2, BigReal(1L),
                                                          BigReal(1L) / 2L, tol10(30 - p));
        CHECK(rep.max_deviation <= tol10(30 - p));
        CHECK(rep.samples > 0);
    }
    SUBCASE("a=2, b=-1/3 at n=3") {
        auto rep = check_invariance_rational_substitution(log_series(7), 3, BigReal(2L),
                                                          BigReal(-1L) / 3L, tol10(30 - p));
        CHECK(rep.max_deviation <= tol10(30 - p));
    }
}

TEST_CASE("invariance check raises on an impossible tolerance") {
    try {
        check_invariance_rational_substitution(log_series(5), 2, BigReal(1L), BigReal(1L) / 2L,
                                               BigReal::pow10(-500));
        FAIL("expected InvarianceViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvarianceViolation);
    }
}

TEST_CASE("series shift identity: g = (f - c0 - ... ) z^{-k} commutes with Pade") {
    // g(z) = (f(z) - c_0) / z for f = -log(1-z)/... use f with c_0 = 0:
    // f = -log(1-z), k = 1, so g = sum z^i/(i+1); then
    // g^{[n-1/m]}(z) = f^{[n/m]}(z)/z.
    int p = default_digits();
    int n = 4, m = 3;
    auto f = log_series(n + m + 1);
    std::vector<BigReal> gc(n + m, BigReal(0L));
    for (int i = 0; i + 1 < n + m + 1; ++i) gc[i] = f.coeffs[i + 1];
    auto gf = pade(TaylorSeries(BigReal(0L), gc), n - 1, m);
    auto ff = pade(f, n, m);
    for (int t = 1; t <= 5; ++t) {
        BigReal z = BigReal::from_ratio(t, 10);
        CHECK(abs(gf.eval(z) - ff.eval(z) / z) <= tol10(30 - p));
    }
}

TEST_CASE("Moebius identity: g = (a + b f)/(c + d f) commutes with [n/n]") {
    int p = default_digits();
    int n = 3;
    auto f = log_series(2 * n + 1);
    // g series by long division of (a + b f) by (c + d f)
    BigReal a(2L), b(1L), c(1L), d(3L);
    int len = 2 * n + 1;
    std::vector<BigReal> num(len, BigReal(0L)), den(len, BigReal(0L)), g(len, BigReal(0L));
    for (int i = 0; i < len; ++i) {
        num[i] = b * f.coeffs[i] + (i == 0 ? a : BigReal(0L));
        den[i] = d * f.coeffs[i] + (i == 0 ? c : BigReal(0L));
    }
    for (int i = 0; i < len; ++i) {
        BigReal acc = num[i];
        for (int l = 1; l <= i; ++l) acc -= den[l] * g[i - l];
        g[i] = acc / den[0];
    }
    auto gn = pade(TaylorSeries(BigReal(0L), g), n, n);
    auto fn = pade(f, n, n);
    for (int t = 1; t <= 5; ++t) {
        BigReal z = BigReal::from_ratio(t, 10);
        BigReal fv = fn.eval(z);
        BigReal expected = (a + b * fv) / (c + d * fv);
        CHECK(abs(gn.eval(z) - expected) <= tol10(30 - p));
    }
}

TEST_CASE("error envelope for the Gamma Stieltjes series decays geometrically") {
    // g(z) = int_0^1 dv/(1+vz) evaluated at z = 1/2; per-step error ratio is
    // bounded by ((sqrt(rho+z)-sqrt(rho))/(sqrt(rho+z)+sqrt(rho)))^2 at rho=1.
    BigReal z = BigReal(1L) / 2L;
    BigReal exact = log(z + 1) / z;
    BigReal factor = (sqrt(z + 1) - 1) / (sqrt(z + 1) + 1);
    BigReal envelope = factor * factor;
    BigReal prev_err(0L);
    for (int n = 2; n <= 10; ++n) {
        std::vector<BigReal> c(2 * n, BigReal(0L));
        for (int j = 0; j < 2 * n; ++j)
            c[j] = (j % 2 == 0 ? BigReal(1L) : BigReal(-1L)) / (j + 1);
        auto r = pade(TaylorSeries(BigReal(0L), std::move(c)), n - 1, n);
        BigReal err = abs(r.eval(z) - exact);
        if (n > 2) {
            CHECK(err < prev_err);
            CHECK(err / prev_err <= envelope * 3L);
        }
        prev_err = err;
    }
}
