#include "polydisc/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace polydisc {

std::string to_string(I128 a) {
    if (a.v == 0) return "0";
    bool neg = a.v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)a.v : (unsigned __int128)a.v;
    std::string s;
    while (u != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

BigInt bigint_from_i128(I128 x) {
    bool neg = x.v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)x.v : (unsigned __int128)x.v;
    BigInt hi(static_cast<unsigned long>(u >> 64));
    BigInt lo(static_cast<unsigned long>(u & ~0ull));
    BigInt r = (hi << 64) + lo;
    return neg ? BigInt(-r) : r;
}

std::optional<I128> i128_from_bigint(const BigInt& x) {
    if (mpz_sizeinbase(x.get_mpz_t(), 2) > 126) return std::nullopt;
    BigInt a = abs(x);
    unsigned __int128 u = 0;
    BigInt hi = a >> 64;
    BigInt lo = a - (hi << 64);
    u = (static_cast<unsigned __int128>(mpz_get_ui(hi.get_mpz_t())) << 64) |
        mpz_get_ui(lo.get_mpz_t());
    __int128 v = static_cast<__int128>(u);
    return I128(sign(x) < 0 ? -v : v);
}

BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign without digits: " + s);
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("malformed integer literal: " + s);
    return BigInt(s);
}

} // namespace polydisc
