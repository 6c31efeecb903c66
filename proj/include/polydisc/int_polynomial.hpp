#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "polydisc/bigint.hpp"

namespace polydisc {

// Integer polynomial a_0 + a_1 x + ... + a_n x^n with exact degree
// (a_n != 0, n >= 1).  The census atom.
class IntPolynomial {
  public:
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        if (c_.size() < 2) throw std::invalid_argument("degree must be >= 1");
        if (sign(c_.back()) == 0) throw std::invalid_argument("leading coefficient is zero");
    }

    static IntPolynomial from(std::initializer_list<long long> coeffs) {
        std::vector<BigInt> v;
        v.reserve(coeffs.size());
        for (long long x : coeffs) v.emplace_back(static_cast<long>(x));
        return IntPolynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    const BigInt& leading() const { return c_.back(); }

  private:
    std::vector<BigInt> c_;
};

} // namespace polydisc
