// SPDX-License-Identifier: MIT
#include "hexp/bigreal.hpp"
#include "hexp/errors.hpp"
#include "hexp/poly.hpp"

#include <doctest.h>

#include <random>

using namespace hexp;

namespace {

BigReal tol10(int e) { return BigReal::pow10(e); }

Poly make_poly(std::initializer_list<long> coeffs) {
    std::vector<BigReal> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("bigreal rational identities at working precision") {
    int p = default_digits();
    BigReal a = BigReal(1L) / 3L;
    BigReal b = BigReal(1L) / 7L;
    BigReal err = abs((a + b) - b - a);
    CHECK(err <= tol10(1 - p) * abs(a));

    BigReal prod = a * 3L;
    CHECK(abs(prod - 1L) <= tol10(1 - p));
}

TEST_CASE("bigreal precision propagates through operations") {
    BigReal lowp(1L, 50);
    BigReal hip(1L, 200);
    BigReal r = lowp + hip;
    CHECK(r.digits() >= std::min(lowp.digits(), hip.digits()));
    CHECK(lowp.digits() >= 50);
    CHECK(lowp.digits() < 60);
}

TEST_CASE("bigreal string round trip and helpers") {
    BigReal x("2.5002779303");
    CHECK(x.to_string(11) == "2.5002779303e+0");
    CHECK(BigReal::pow10(-3).to_double() == doctest::Approx(1e-3));
    CHECK(BigReal::pi().to_double() == doctest::Approx(3.14159265358979));
    CHECK(tgamma(BigReal(0.5)).to_double() == doctest::Approx(1.7724538509055160));
    // Gamma at a negative non-integer argument
    CHECK(tgamma(BigReal(-1.2)).to_double() == doctest::Approx(4.8509571405220973));
}

TEST_CASE("solve_dense solves 1x1 and diagonal systems") {
    {
        auto x = solve_dense({{BigReal(1L)}}, {BigReal(-1L) / 2L});
        REQUIRE(x.size() == 1);
        CHECK(abs(x[0] + BigReal(1L) / 2L) < tol10(-100));
    }
    {
        auto x = solve_dense({{BigReal(1L), BigReal(0L)}, {BigReal(0L), BigReal(2L)}},
                             {BigReal(3L), BigReal(4L)});
        REQUIRE(x.size() == 2);
        CHECK(abs(x[0] - 3L) < tol10(-100));
        CHECK(abs(x[1] - 2L) < tol10(-100));
    }
}

TEST_CASE("solve_dense on the 1x1 log-series denominator system") {
    // coefficients {0, 1, 1/2}: [c1][b1] = [-c2] gives b1 = -1/2
    auto x = solve_dense({{BigReal(1L)}}, {-BigReal(1L) / 2L});
    CHECK(abs(x[0] + BigReal(1L) / 2L) < tol10(-100));
}

TEST_CASE("solve_dense residual bound on random well-conditioned systems") {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    int p = default_digits();
    for (int n : {5, 12, 30}) {
        std::vector<std::vector<BigReal>> a(n, std::vector<BigReal>(n, BigReal(0L)));
        std::vector<BigReal> rhs(n, BigReal(0L));
        BigReal rhs_norm(0L);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                a[i][j] = BigReal(unif(rng)) + (i == j ? BigReal(2L * n) : BigReal(0L));
            rhs[i] = BigReal(unif(rng));
            rhs_norm = max(rhs_norm, abs(rhs[i]));
        }
        auto orig_a = a;
        auto orig_rhs = rhs;
        auto x = solve_dense(a, rhs);
        BigReal resid(0L);
        for (int i = 0; i < n; ++i) {
            BigReal s(0L);
            for (int j = 0; j < n; ++j) s += orig_a[i][j] * x[j];
            resid = max(resid, abs(s - orig_rhs[i]));
        }
        CHECK(resid <= tol10(10 - p) * rhs_norm);
    }
}

TEST_CASE("solve_dense rejects singular matrices") {
    CHECK_THROWS_AS(solve_dense({{BigReal(1L), BigReal(2L)}, {BigReal(2L), BigReal(4L)}},
                                {BigReal(1L), BigReal(2L)}),
                    Error);
    try {
        solve_dense({{BigReal(0L)}}, {BigReal(1L)});
        FAIL("expected SingularMatrix");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularMatrix);
    }
}

TEST_CASE("roots of x^2 - 1 on (-2, 2)") {
    auto roots = real_roots_in_interval(make_poly({-1, 0, 1}), BigReal(-2L), BigReal(2L), 2);
    REQUIRE(roots.size() == 2);
    CHECK(abs(roots[0] + 1L) < tol10(-150));
    CHECK(abs(roots[1] - 1L) < tol10(-150));
}

TEST_CASE("roots of the shifted degree-2 Legendre polynomial on (0,1)") {
    // 6x^2 - 6x + 1 has roots 1/2 -/+ sqrt(3)/6
    auto roots = real_roots_in_interval(make_poly({1, -6, 6}), BigReal(0L), BigReal(1L), 2);
    REQUIRE(roots.size() == 2);
    BigReal s3 = sqrt(BigReal(3L));
    CHECK(abs(roots[0] - (BigReal(1L) / 2L - s3 / 6L)) < tol10(-150));
    CHECK(abs(roots[1] - (BigReal(1L) / 2L + s3 / 6L)) < tol10(-150));
    CHECK(roots[0].to_double() == doctest::Approx(0.211325).epsilon(1e-5));
    CHECK(roots[1].to_double() == doctest::Approx(0.788675).epsilon(1e-5));
}

TEST_CASE("root of the linear shifted Jacobi on (0,1)") {
    // 2x - 1 on (0,1)
    auto roots = real_roots_in_interval(make_poly({-1, 2}), BigReal(0L), BigReal(1L), 1);
    REQUIRE(roots.size() == 1);
    CHECK(abs(roots[0] - BigReal(1L) / 2L) < tol10(-150));
}

TEST_CASE("root finder residual and ordering properties") {
    int p = default_digits();
    // Wilkinson-flavored spread: roots at k/10 for k = 1..9
    std::vector<BigReal> c{BigReal(1L)};
    Poly poly(c);
    for (long k = 1; k <= 9; ++k)
        poly = poly * Poly(std::vector<BigReal>{-BigReal(k) / 10L, BigReal(1L)});
    auto roots = real_roots_in_interval(poly, BigReal(0L), BigReal(1L), 9);
    REQUIRE(roots.size() == 9);
    BigReal lead = abs(poly.c.back());
    BigReal bound = tol10(15 - p) * lead; // (hi-lo)^degree = 1
    for (size_t i = 0; i < roots.size(); ++i) {
        CHECK(abs(poly.eval(roots[i])) <= bound);
        if (i > 0) CHECK(roots[i] > roots[i - 1] + tol10(-p / 4));
    }
}

TEST_CASE("root finder rejects degenerate input") {
    CHECK_THROWS_AS(real_roots_in_interval(Poly{}, BigReal(0L), BigReal(1L)), Error);
    CHECK_THROWS_AS(real_roots_in_interval(make_poly({1, 1}), BigReal(1L), BigReal(0L)), Error);
    try {
        // x^2 + 1 has no real roots: demanding 2 must fail
        real_roots_in_interval(make_poly({1, 0, 1}), BigReal(-2L), BigReal(2L), 2);
        FAIL("expected RootCountMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RootCountMismatch);
    }
}
