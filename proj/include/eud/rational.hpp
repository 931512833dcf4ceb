#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace eud {

/// Exact rational scalar. Canonical form is maintained by GMP
/// (positive denominator, reduced, zero stored as 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

using Real = long double;
using Complex = std::complex<Real>;

/// Converts an arbitrary-size integer to long double without overflowing
/// the double intermediate that mpz_get_d would use.
inline Real to_real(const Integer& z) {
    signed long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::ldexp(static_cast<Real>(mant), static_cast<int>(exp));
}

inline Real to_real(const Rational& q) {
    signed long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    return std::ldexp(static_cast<Real>(mn) / static_cast<Real>(md),
                      static_cast<int>(en - ed));
}

/// Parses "-1", "325/32", "2.236", "2.236/7", "-4.583/21".
/// Decimal parts become exact rationals (2.236 -> 2236/1000).
inline Rational parse_rational(const std::string& s) {
    auto parse_plain = [](const std::string& part) -> Rational {
        auto dot = part.find('.');
        if (dot == std::string::npos) {
            Rational q;
            if (q.set_str(part, 10) != 0)
                throw std::invalid_argument("bad rational literal: " + part);
            q.canonicalize();
            return q;
        }
        std::string digits = part.substr(0, dot) + part.substr(dot + 1);
        std::size_t frac = part.size() - dot - 1;
        Integer num;
        if (num.set_str(digits, 10) != 0)
            throw std::invalid_argument("bad decimal literal: " + part);
        Integer den = 1;
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return q;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return parse_plain(s);
    Rational num = parse_plain(s.substr(0, slash));
    Rational den = parse_plain(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational q = num / den;
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline long binomial_l(long n, long k) {
    return static_cast<long>(binomial(n, k).get_si());
}

}  // namespace eud
