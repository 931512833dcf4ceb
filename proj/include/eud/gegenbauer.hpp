#pragma once

#include <stdexcept>

#include "eud/harmonic.hpp"
#include "eud/unipoly.hpp"

namespace eud {

/// Degree-l Gegenbauer polynomial in the addition-formula normalization
/// Q_l(1) = harm_dim(n, l). For n >= 3 this rescales the classical
/// ultraspherical C_l^{(n-2)/2}; for n = 2 the cosine polynomials
/// Q_l(cos t) = 2 cos(l t) are built directly (Q_0 = 1).
inline UniPoly gegenbauer(int n, int l) {
    if (n < 2 || l < 0) throw std::invalid_argument("gegenbauer: bad arguments");
    if (l == 0) return UniPoly::constant(Rational(1));
    const UniPoly x = UniPoly::x();
    if (n == 2) {
        // T_{l+1} = 2x T_l - T_{l-1}, doubled.
        UniPoly prev = UniPoly::constant(Rational(2));  // 2*T_0
        UniPoly cur = Rational(2) * x;                  // 2*T_1
        for (int k = 2; k <= l; ++k) {
            UniPoly next = Rational(2) * x * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    const Rational lambda(n - 2, 2);
    UniPoly prev = UniPoly::constant(Rational(1));
    UniPoly cur = Rational(2) * lambda * x;
    for (int k = 2; k <= l; ++k) {
        UniPoly next = (Rational(2) * (Rational(k - 1) + lambda) * x * cur -
                        (Rational(k - 2) + Rational(2) * lambda) * prev) *
                       Rational(1, k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    Rational at_one = cur.eval(Rational(1));
    return cur * (Rational(harm_dim(n, l)) / at_one);
}

}  // namespace eud
