# SPDX-License-Identifier: MIT
"""Smoke tests for the pyhexp extension module."""

import json
import math
import sys

import pyhexp


def approx_equal(a, b, tol):
    return abs(a - b) <= tol


def main():
    failures = []

    def check(name, ok):
        print(("[PASS] " if ok else "[FAIL] ") + name)
        if not ok:
            failures.append(name)

    # two-sided Gamma n=1: drift 1, one term (27/16, 3/2)
    hep = json.loads(pyhexp.approximate('{"family": "gamma"}', two_sided=True, n=1))
    check("gamma two-sided n=1 drift", approx_equal(float(hep["drift"]), 1.0, 1e-25))
    term = hep["pos_terms"][0]
    check(
        "gamma two-sided n=1 term",
        approx_equal(float(term["amplitude"]), 27.0 / 16.0, 1e-25)
        and approx_equal(float(term["rate"]), 1.5, 1e-25),
    )

    # cumulants of the approximation match the harmonic cumulants j! / j
    cums = [float(c) for c in pyhexp.cumulants(json.dumps(hep), 3)]
    check(
        "gamma cumulant match",
        approx_equal(cums[0], 1.0, 1e-20)
        and approx_equal(cums[1], 1.0, 1e-20)
        and approx_equal(cums[2], 2.0, 1e-20),
    )

    # exact Gamma CDF at t=1 is 1 - e^{-x}
    p = pyhexp.cdf('{"family": "gamma"}', t=1.0, x=1.0, umax=6000.0)
    check("gamma exact cdf", approx_equal(p, 1.0 - math.exp(-1.0), 1e-7))

    # VG European benchmark on the exact exponent
    vg = {"family": "vg", "a": "21.8735", "ahat": "56.4414", "nu": "0.20"}
    vg["mu"] = pyhexp.martingale_drift(json.dumps(vg), "0.04")
    price = pyhexp.price_european_call(
        json.dumps(vg), S0=100.0, K=100.0, T=0.25, r="0.04", umax=20000.0
    )
    check("vg benchmark price", approx_equal(price, 2.5002779303, 1e-6))

    # one-sided composed approximation prices close to the benchmark
    hep5 = pyhexp.approximate(json.dumps(vg), two_sided=False, n=5, k=1)
    price5 = pyhexp.price_european_call(
        hep5, S0=100.0, K=100.0, T=0.25, r="0.04", umax=40000.0, tail_tol=1e-5
    )
    check("vg approx price", approx_equal(price5, 2.5002779303, 5e-4))

    # density of the approximation is nonnegative and close to e^{-x}/x * x
    d = pyhexp.levy_density(hep5, 0.5)
    check("density nonnegative", d >= 0.0)

    if failures:
        print("smoke test FAILED: " + ", ".join(failures))
        return 1
    print("smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
