#pragma once

#include <cstdint>
#include <string>

namespace polydisc {

// Signed 128-bit integer with sticky overflow detection.  Arithmetic never
// traps; once any operation overflows, the thread-local flag stays set until
// cleared, and callers redo the computation with arbitrary precision.
struct I128 {
    __int128 v = 0;

    I128() = default;
    constexpr I128(long long x) : v(x) {}
    constexpr I128(int x) : v(x) {}
    explicit constexpr I128(__int128 x) : v(x) {}

    static thread_local bool overflow;
    static void clear_overflow() { overflow = false; }

    friend I128 operator+(I128 a, I128 b) {
        I128 r;
        if (__builtin_add_overflow(a.v, b.v, &r.v)) overflow = true;
        return r;
    }
    friend I128 operator-(I128 a, I128 b) {
        I128 r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v)) overflow = true;
        return r;
    }
    friend I128 operator*(I128 a, I128 b) {
        I128 r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v)) overflow = true;
        return r;
    }
    friend I128 operator/(I128 a, I128 b) {
        // Exact-ring division; b == 0 only on caller bugs, MIN/-1 overflows.
        if (b.v == 0) { overflow = true; return I128(); }
        if (b.v == -1 && a.v == min_value()) { overflow = true; return I128(); }
        return I128(a.v / b.v);
    }
    friend I128 operator%(I128 a, I128 b) {
        if (b.v == 0) { overflow = true; return I128(); }
        if (b.v == -1) return I128(0);
        return I128(a.v % b.v);
    }
    I128 operator-() const {
        if (v == min_value()) { overflow = true; return *this; }
        return I128(-v);
    }
    I128& operator+=(I128 b) { *this = *this + b; return *this; }
    I128& operator-=(I128 b) { *this = *this - b; return *this; }
    I128& operator*=(I128 b) { *this = *this * b; return *this; }

    friend bool operator==(I128 a, I128 b) { return a.v == b.v; }
    friend bool operator!=(I128 a, I128 b) { return a.v != b.v; }
    friend bool operator<(I128 a, I128 b) { return a.v < b.v; }
    friend bool operator<=(I128 a, I128 b) { return a.v <= b.v; }
    friend bool operator>(I128 a, I128 b) { return a.v > b.v; }
    friend bool operator>=(I128 a, I128 b) { return a.v >= b.v; }

    static constexpr __int128 min_value() {
        return -(__int128)1 << 126 << 1;
    }
    static constexpr __int128 max_value() { return ~min_value(); }
};

inline thread_local bool I128::overflow = false;

inline I128 abs(I128 a) { return a.v < 0 ? -a : a; }
inline int sign(I128 a) { return a.v < 0 ? -1 : (a.v > 0 ? 1 : 0); }

inline I128 gcd(I128 a, I128 b) {
    __int128 x = a.v < 0 ? -a.v : a.v;   // |MIN| wraps; loop below still terminates
    __int128 y = b.v < 0 ? -b.v : b.v;   // and callers of content never feed MIN
    while (y != 0) {
        __int128 t = x % y;
        x = y;
        y = t;
    }
    return I128(x);
}

std::string to_string(I128 a);

} // namespace polydisc
