#pragma once

#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "polydisc/bigint.hpp"
#include "polydisc/int128.hpp"

// Dense univariate polynomial arithmetic over an abstract coefficient ring.
// coeff[i] is the coefficient of x^i; the empty vector is the zero polynomial
// and nonzero polynomials carry no trailing zero.  The same templates run on
// exact rings (BigInt, I128) and on floating-point types for the numeric
// discriminant/Sturm paths; ring_traits switches content handling on and off.

namespace polydisc {

template <class T>
struct ring_traits {
    static constexpr bool exact = false;
    static bool is_zero(const T& x) { return x == T(0); }
    static int sgn(const T& x) { return x < T(0) ? -1 : (x > T(0) ? 1 : 0); }
    static T abs(const T& x) { return x < T(0) ? -x : x; }
};

template <>
struct ring_traits<BigInt> {
    static constexpr bool exact = true;
    static bool is_zero(const BigInt& x) { return sign(x) == 0; }
    static int sgn(const BigInt& x) { return sign(x); }
    static BigInt abs(const BigInt& x) { return polydisc::abs(x); }
    static BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static void divexact(BigInt& q, const BigInt& a, const BigInt& b) {
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
};

template <>
struct ring_traits<I128> {
    static constexpr bool exact = true;
    static bool is_zero(I128 x) { return x.v == 0; }
    static int sgn(I128 x) { return sign(x); }
    static I128 abs(I128 x) { return polydisc::abs(x); }
    static I128 gcd(I128 a, I128 b) { return polydisc::gcd(a, b); }
    static void divexact(I128& q, I128 a, I128 b) { q = a / b; }
};

template <class T>
using Poly = std::vector<T>;

template <class T>
void poly_normalize(Poly<T>& p) {
    while (!p.empty() && ring_traits<T>::is_zero(p.back())) p.pop_back();
}

template <class T>
bool poly_is_zero(const Poly<T>& p) {
    return p.empty();
}

// Degree of the zero polynomial is -1 by convention.
template <class T>
int poly_deg(const Poly<T>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class T>
const T& poly_lc(const Poly<T>& p) {
    return p.back();
}

template <class T>
void poly_derivative(const Poly<T>& p, Poly<T>& out) {
    out.clear();
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * T(static_cast<long long>(i)));
    poly_normalize(out);
}

template <class T>
void poly_scale(Poly<T>& p, const T& c) {
    for (auto& x : p) x = x * c;
}

template <class T>
T poly_content(const Poly<T>& p) {
    T g(0);
    for (const auto& c : p) {
        g = ring_traits<T>::gcd(g, c);
        if (g == T(1)) break;
    }
    return g;
}

template <class T>
void poly_divexact_scalar(Poly<T>& p, const T& c) {
    for (auto& x : p) ring_traits<T>::divexact(x, x, c);
}

// Primitive part with positive leading coefficient (exact rings).
template <class T>
void poly_primitive_part(Poly<T>& p) {
    poly_normalize(p);
    if (p.empty()) return;
    T c = poly_content(p);
    if (ring_traits<T>::sgn(poly_lc(p)) < 0) c = -c;
    if (!(c == T(1))) poly_divexact_scalar(p, c);
}

// Pseudo-remainder: on return r satisfies lc(b)^(deg a - deg b + 1) * a = q*b + r.
// Requires deg a >= deg b >= 0.
template <class T>
void poly_prem(const Poly<T>& a, const Poly<T>& b, Poly<T>& r) {
    const int db = poly_deg(b);
    const T& lb = poly_lc(b);
    r = a;
    int e = poly_deg(a) - db + 1;
    while (!r.empty() && poly_deg(r) >= db) {
        const int dr = poly_deg(r);
        T top = r.back();
        r.pop_back();
        for (auto& x : r) x = x * lb;
        const int shift = dr - db;
        for (int i = 0; i < db; ++i) r[shift + i] = r[shift + i] - top * b[i];
        poly_normalize(r);
        --e;
    }
    if (e > 0) {
        T f(1);
        for (int i = 0; i < e; ++i) f = f * lb;
        poly_scale(r, f);
    }
}

template <class T>
T ring_pow(T base, int e) {
    T r(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

// Resultant of a and b via the subresultant PRS (fraction-free for exact
// rings; the same control flow doubles as the floating-point evaluator).
// Destroys a and b.  For I128, check I128::overflow afterwards.
template <class T>
T resultant_destructive(Poly<T>& a, Poly<T>& b) {
    poly_normalize(a);
    poly_normalize(b);
    if (a.empty() || b.empty()) return T(0);

    int s = 1;
    if (poly_deg(a) < poly_deg(b)) {
        std::swap(a, b);
        if ((poly_deg(a) & 1) && (poly_deg(b) & 1)) s = -s;
    }

    T t(1);
    if constexpr (ring_traits<T>::exact) {
        T ca = poly_content(a);
        T cb = poly_content(b);
        poly_divexact_scalar(a, ca);
        poly_divexact_scalar(b, cb);
        t = ring_pow(ca, poly_deg(b)) * ring_pow(cb, poly_deg(a));
    }

    if (poly_deg(b) == 0) {
        T r = t * ring_pow(poly_lc(b), poly_deg(a));
        return s < 0 ? -r : r;
    }

    T g(1), h(1);
    Poly<T> r;
    while (true) {
        const int da = poly_deg(a), db = poly_deg(b);
        const int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        poly_prem(a, b, r);
        if (r.empty()) return T(0);  // nonconstant gcd
        std::swap(a, b);             // a <- old b
        // b <- r / (g*h^delta)
        b = std::move(r);
        r.clear();
        {
            T div = g * ring_pow(h, delta);
            if constexpr (ring_traits<T>::exact) {
                poly_divexact_scalar(b, div);
            } else {
                for (auto& x : b) x = x / div;
            }
        }
        g = poly_lc(a);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            T num = ring_pow(g, delta);
            if constexpr (ring_traits<T>::exact) {
                ring_traits<T>::divexact(h, num, ring_pow(h, delta - 1));
            } else {
                h = num / ring_pow(h, delta - 1);
            }
        }
        if (poly_deg(b) == 0) break;
    }

    // deg a >= 1, b a nonzero constant
    T num = ring_pow(poly_lc(b), poly_deg(a));
    T res;
    if constexpr (ring_traits<T>::exact) {
        ring_traits<T>::divexact(res, num, ring_pow(h, poly_deg(a) - 1));
    } else {
        res = num / ring_pow(h, poly_deg(a) - 1);
    }
    res = t * res;
    return s < 0 ? -res : res;
}

// Polynomial gcd over an exact ring: primitive, positive leading coefficient.
template <class T>
Poly<T> poly_gcd_pp(Poly<T> a, Poly<T> b) {
    static_assert(ring_traits<T>::exact);
    poly_normalize(a);
    poly_normalize(b);
    if (a.empty()) {
        poly_primitive_part(b);
        return b;
    }
    if (b.empty()) {
        poly_primitive_part(a);
        return a;
    }
    if (poly_deg(a) < poly_deg(b)) std::swap(a, b);
    poly_primitive_part(a);
    poly_primitive_part(b);
    Poly<T> r;
    while (true) {
        if (poly_deg(b) == 0) return {T(1)};
        poly_prem(a, b, r);
        if (r.empty()) return b;
        poly_primitive_part(r);
        a = std::move(b);
        b = std::move(r);
        r.clear();
    }
}

// Exact quotient a/b in Z[x]; the caller guarantees divisibility.
template <class T>
Poly<T> poly_divexact(const Poly<T>& a, const Poly<T>& b) {
    static_assert(ring_traits<T>::exact);
    if (a.empty()) return {};
    Poly<T> q(a.size() - b.size() + 1, T(0));
    Poly<T> r = a;
    const int db = poly_deg(b);
    for (int i = poly_deg(r); i >= db;) {
        T qc;
        ring_traits<T>::divexact(qc, r[i], poly_lc(b));
        q[i - db] = qc;
        for (int k = 0; k <= db; ++k) r[i - db + k] = r[i - db + k] - qc * b[k];
        poly_normalize(r);
        i = poly_deg(r);
    }
    poly_normalize(q);
    return q;
}

// Full integer gcd (content times primitive gcd), positive lc.
template <class T>
Poly<T> poly_gcd_full(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> pa = a, pb = b;
    poly_normalize(pa);
    poly_normalize(pb);
    if (pa.empty()) {
        if (ring_traits<T>::sgn(poly_lc(pb)) < 0) poly_scale(pb, T(-1));
        return pb;
    }
    if (pb.empty()) {
        if (ring_traits<T>::sgn(poly_lc(pa)) < 0) poly_scale(pa, T(-1));
        return pa;
    }
    T ca = ring_traits<T>::abs(poly_content(pa));
    T cb = ring_traits<T>::abs(poly_content(pb));
    Poly<T> g = poly_gcd_pp(pa, pb);
    poly_scale(g, ring_traits<T>::gcd(ca, cb));
    return g;
}

// Squarefree decomposition over Z (Yun): p = prod f_i^i up to a constant.
// Returns (factor, multiplicity) with deg f_i >= 1.
std::vector<std::pair<Poly<BigInt>, int>> squarefree_decomposition(const Poly<BigInt>& p);

struct SturmCount {
    int distinct_real_roots = 0;
    bool reliable = true;  // floating chains flag ill-conditioned sign decisions
};

// Distinct real roots of p over all of R, via a sign-corrected
// pseudo-remainder chain evaluated at -inf/+inf.  Works for non-squarefree
// input (counts distinct roots).  Exact rings always report reliable=true.
template <class T>
SturmCount count_real_roots_chain(Poly<T> p0, Poly<T> p1, double cond_threshold = 0.0) {
    SturmCount out;
    poly_normalize(p0);
    poly_normalize(p1);
    if (p0.empty() || poly_deg(p0) == 0) return out;

    // Sign variations at +inf and -inf, updated per chain element.
    int v_pos = 0, v_neg = 0;
    int last_pos = 0, last_neg = 0;
    auto feed = [&](const Poly<T>& q) {
        const int sl = ring_traits<T>::sgn(poly_lc(q));
        const int sp = sl;
        const int sn = (poly_deg(q) & 1) ? -sl : sl;
        if (sp != 0) {
            if (last_pos != 0 && sp != last_pos) ++v_pos;
            last_pos = sp;
        }
        if (sn != 0) {
            if (last_neg != 0 && sn != last_neg) ++v_neg;
            last_neg = sn;
        }
    };

    feed(p0);
    if (p1.empty()) {
        out.distinct_real_roots = 0;  // deg >= 1 with zero derivative cannot happen over char 0
        return out;
    }
    feed(p1);

    Poly<T> r;
    while (poly_deg(p1) >= 1) {
        if constexpr (!ring_traits<T>::exact) {
            // Cancellation guard: tiny leading coefficient relative to the body.
            T mx(0);
            for (const auto& c : p1) {
                T a = ring_traits<T>::abs(c);
                if (a > mx) mx = a;
            }
            if (ring_traits<T>::abs(poly_lc(p1)) < mx * T(cond_threshold)) out.reliable = false;
        }
        poly_prem(p0, p1, r);
        if (r.empty()) break;
        // Sturm chain needs r == -(positive)*(p0 mod p1); prem scaled by
        // lc(p1)^(delta+1), so flip according to that multiplier's sign.
        const int delta = poly_deg(p0) - poly_deg(p1);
        const int ms = ((delta + 1) % 2 == 0) ? 1 : ring_traits<T>::sgn(poly_lc(p1));
        if (ms > 0) poly_scale(r, T(-1));
        if constexpr (ring_traits<T>::exact) {
            T c = ring_traits<T>::abs(poly_content(r));
            if (!(c == T(1))) poly_divexact_scalar(r, c);
        } else {
            T mx(0);
            for (const auto& c : r) {
                T a = ring_traits<T>::abs(c);
                if (a > mx) mx = a;
            }
            if (!(mx == T(0))) {
                for (auto& c : r) c = c / mx;
            }
        }
        feed(r);
        p0 = std::move(p1);
        p1 = std::move(r);
        r.clear();
    }

    out.distinct_real_roots = v_neg - v_pos;
    return out;
}

// Fraction-free (Bareiss) determinant of a square matrix over an exact ring.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

} // namespace polydisc
