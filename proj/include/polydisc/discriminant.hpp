#pragma once

#include <optional>
#include <span>

#include "polydisc/int_polynomial.hpp"
#include "polydisc/poly_ring.hpp"

namespace polydisc {

// Exact discriminant via a (2n-1)x(2n-1) fraction-free determinant.
// Throws std::invalid_argument for degree < 2.
BigInt discriminant_det(const IntPolynomial& p);

// Exact discriminant via the subresultant remainder sequence of (P, P'),
// normalized by Res(P, P') = (-1)^(n(n-1)/2) a_n D(P).  Agrees with
// discriminant_det on all inputs.
BigInt discriminant_prs(const IntPolynomial& p);

// int128 fast path for the census kernel; nullopt on overflow (caller
// promotes to BigInt).  Coefficients are a_0..a_n, a_n != 0, n >= 2.
std::optional<I128> discriminant_prs_i128(std::span<const long long> coeffs);

// Floating-point discriminant through the same subresultant formula;
// instantiated for double, long double and __float128.
template <class F>
F discriminant_fp(std::span<const F> coeffs) {
    Poly<F> p(coeffs.begin(), coeffs.end());
    poly_normalize(p);
    const int n = poly_deg(p);
    Poly<F> dp;
    poly_derivative(p, dp);
    F lead = poly_lc(p);
    F res = resultant_destructive(p, dp);
    F d = res / lead;
    return ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) ? -d : d;
}

} // namespace polydisc
