#pragma once

#include <span>

#include "polydisc/int_polynomial.hpp"
#include "polydisc/poly_ring.hpp"

namespace polydisc {

// Number of complex-conjugate root pairs, counted with multiplicity
// (0 <= s <= n/2; the polynomial has n - 2s real roots with multiplicity).
struct Signature {
    int s = 0;
};

// Exact: squarefree decomposition over Z, then a Sturm chain per factor.
Signature signature(const IntPolynomial& p);

// Real roots counted with multiplicity (the r in s = (n - r)/2).
int real_root_count_with_multiplicity(const IntPolynomial& p);

// int128 fast path for squarefree input (D != 0 known); nullopt on overflow.
std::optional<int> distinct_real_roots_i128(std::span<const long long> coeffs);

struct FpSignature {
    int s = 0;
    bool reliable = true;
};

// Floating-point signature via a numeric Sturm chain.  Samples drawn from a
// continuous distribution are squarefree almost surely; `reliable` is false
// when a sign decision fell below cond_threshold and the caller should
// escalate precision.
template <class F>
FpSignature signature_fp(std::span<const F> coeffs, double cond_threshold) {
    Poly<F> p(coeffs.begin(), coeffs.end());
    poly_normalize(p);
    const int n = poly_deg(p);
    Poly<F> dp;
    poly_derivative(p, dp);
    SturmCount c = count_real_roots_chain(std::move(p), std::move(dp), cond_threshold);
    FpSignature out;
    out.reliable = c.reliable && ((n - c.distinct_real_roots) % 2 == 0) &&
                   c.distinct_real_roots >= 0 && c.distinct_real_roots <= n;
    out.s = out.reliable ? (n - c.distinct_real_roots) / 2 : -1;
    return out;
}

} // namespace polydisc
