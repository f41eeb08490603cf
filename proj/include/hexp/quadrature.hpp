// SPDX-License-Identifier: MIT
#pragma once

#include "hexp/pade.hpp"
#include "hexp/poly.hpp"

#include <vector>

namespace hexp {

/// Gaussian quadrature rule for a positive measure on (lo, hi): strictly
/// increasing interior nodes, strictly positive weights, exact on monomials
/// through degree 2n-1. Nodes flagged `zero_node` are exactly zero by
/// construction (degree-deficient denominator), not rounded.
struct QuadratureRule {
    std::vector<BigReal> nodes;
    std::vector<BigReal> weights;
    std::vector<bool> zero_node;
    int order = 0;
    BigReal lo, hi;

    BigReal moment(int k) const; // sum w_i x_i^k
};

struct JacobiParams {
    BigReal alpha; // > -1
    BigReal beta;  // > -1
    int degree = 0;
};

/// P_n^{(alpha,beta)}(x) as the explicit finite sum
/// sum_j C(alpha+n, n-j) C(alpha+beta+n+j, j) ((x-1)/2)^j.
BigReal jacobi_eval(const JacobiParams& p, const BigReal& x);

/// Monomial-basis coefficients of P_n^{(alpha,beta)}.
Poly jacobi_poly(const JacobiParams& p);

/// The n distinct roots in (-1, 1), ascending.
std::vector<BigReal> jacobi_roots(const JacobiParams& p);

/// Gauss-Jacobi rule for (1-x)^alpha (1+x)^beta dx on (-1, 1); weights from
/// the leading-coefficient/norm formula.
QuadratureRule gauss_jacobi(const JacobiParams& p);

/// Norm integral of P_n^{(alpha,beta)} against its weight.
BigReal jacobi_norm(const JacobiParams& p);

/// Gaussian rule from the first 2n moments of a positive measure supported
/// in `lo..hi`: nodes and weights are extracted as poles/residues of the
/// [n-1/n] Pade approximant of the moment series sum (-z)^j m_j.
/// Raises NotAStieltjesSequence when the moments are not those of a positive
/// measure with at least n support points (singular system, non-positive
/// weights, or escaping nodes).
QuadratureRule gauss_from_moments(const std::vector<BigReal>& moments, const BigReal& lo,
                                  const BigReal& hi);

} // namespace hexp
