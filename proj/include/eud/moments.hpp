#pragma once

#include <stdexcept>

#include "eud/mpoly.hpp"
#include "eud/rational.hpp"

namespace eud {

/// Average of the monomial x^alpha over the unit sphere S^{n-1}:
/// zero if any exponent is odd, otherwise
///   prod_i (alpha_i - 1)!! / prod_{k=0}^{|alpha|/2 - 1} (n + 2k),
/// with (-1)!! = 1.
inline Rational sphere_moment(const MultiIndex& alpha, int n) {
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("sphere_moment: dimension mismatch");
    long total = 0;
    for (int a : alpha) {
        if (a % 2 != 0) return Rational(0);
        total += a;
    }
    Integer num = 1;
    for (int a : alpha)
        for (long k = a - 1; k >= 2; k -= 2) num *= k;
    Integer den = 1;
    for (long k = 0; k < total / 2; ++k) den *= (n + 2 * k);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace eud
