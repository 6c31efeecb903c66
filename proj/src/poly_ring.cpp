#include "polydisc/poly_ring.hpp"

#include <stdexcept>

namespace polydisc {

std::vector<std::pair<Poly<BigInt>, int>> squarefree_decomposition(const Poly<BigInt>& p) {
    Poly<BigInt> f = p;
    poly_normalize(f);
    if (f.empty() || poly_deg(f) == 0)
        throw std::invalid_argument("squarefree decomposition needs deg >= 1");

    std::vector<std::pair<Poly<BigInt>, int>> out;
    Poly<BigInt> fp;
    poly_derivative(f, fp);
    Poly<BigInt> g = poly_gcd_full(f, fp);
    if (poly_deg(g) == 0) {
        out.emplace_back(std::move(f), 1);
        return out;
    }
    // Yun's algorithm with exact integer divisions (gcd includes content).
    Poly<BigInt> w = poly_divexact(f, g);
    Poly<BigInt> y = poly_divexact(fp, g);
    Poly<BigInt> wd, z;
    poly_derivative(w, wd);
    z.resize(std::max(y.size(), wd.size()), BigInt(0));
    for (size_t i = 0; i < z.size(); ++i) {
        BigInt a = i < y.size() ? y[i] : BigInt(0);
        BigInt b = i < wd.size() ? wd[i] : BigInt(0);
        z[i] = a - b;
    }
    poly_normalize(z);

    int mult = 1;
    while (poly_deg(w) > 0) {
        Poly<BigInt> fi = poly_gcd_full(w, z);
        w = poly_divexact(w, fi);
        Poly<BigInt> ynew = poly_divexact(z, fi);
        poly_derivative(w, wd);
        z.assign(std::max(ynew.size(), wd.size()), BigInt(0));
        for (size_t i = 0; i < z.size(); ++i) {
            BigInt a = i < ynew.size() ? ynew[i] : BigInt(0);
            BigInt b = i < wd.size() ? wd[i] : BigInt(0);
            z[i] = a - b;
        }
        poly_normalize(z);
        if (poly_deg(fi) > 0) out.emplace_back(std::move(fi), mult);
        ++mult;
    }
    return out;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return BigInt(1);

    int sgn_acc = 1;
    BigInt prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (sign(m[k][k]) == 0) {
            size_t piv = k + 1;
            while (piv < n && sign(m[piv][k]) == 0) ++piv;
            if (piv == n) return BigInt(0);
            std::swap(m[k], m[piv]);
            sgn_acc = -sgn_acc;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1];
    return sgn_acc < 0 ? BigInt(-det) : det;
}

} // namespace polydisc
