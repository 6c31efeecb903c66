#include "polydisc/discriminant.hpp"

#include <stdexcept>

namespace polydisc {

namespace {

// The (2n-1)x(2n-1) determinant display: n-1 shifted rows of
// (a_n,...,a_0) and n shifted rows of (n a_n,...,1 a_1), where the leading
// entries of the first row of each block are replaced by 1 and n.  Since
// column 0 has no other nonzero entries, this equals Res(P,P')/a_n.
std::vector<std::vector<BigInt>> discriminant_matrix(const IntPolynomial& p) {
    const int n = p.degree();
    const int size = 2 * n - 1;
    std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size, BigInt(0)));
    for (int r = 0; r < n - 1; ++r)
        for (int k = 0; k <= n; ++k) {
            BigInt v = (r == 0 && k == 0) ? BigInt(1) : p[n - k];
            m[r][r + k] = v;
        }
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            BigInt v = (r == 0 && k == 0) ? BigInt(n)
                                          : BigInt(n - k) * p[n - k];
            m[n - 1 + r][r + k] = v;
        }
    return m;
}

} // namespace

BigInt discriminant_det(const IntPolynomial& p) {
    const int n = p.degree();
    if (n < 2) throw std::invalid_argument("discriminant needs degree >= 2");
    BigInt det = bareiss_determinant(discriminant_matrix(p));
    return ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) ? BigInt(-det) : det;
}

BigInt discriminant_prs(const IntPolynomial& p) {
    const int n = p.degree();
    if (n < 2) throw std::invalid_argument("discriminant needs degree >= 2");
    Poly<BigInt> a = p.coeffs();
    Poly<BigInt> da;
    poly_derivative(a, da);
    BigInt res = resultant_destructive(a, da);
    BigInt d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), p.leading().get_mpz_t());
    return ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) ? BigInt(-d) : d;
}

std::optional<I128> discriminant_prs_i128(std::span<const long long> coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    I128::clear_overflow();
    Poly<I128> a;
    a.reserve(coeffs.size());
    for (long long c : coeffs) a.emplace_back(c);
    Poly<I128> da;
    poly_derivative(a, da);
    I128 lead = a.back();
    I128 res = resultant_destructive(a, da);
    if (I128::overflow) {
        I128::clear_overflow();
        return std::nullopt;
    }
    I128 d = res / lead;
    if (I128::overflow) {
        I128::clear_overflow();
        return std::nullopt;
    }
    return ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) ? -d : d;
}

} // namespace polydisc
