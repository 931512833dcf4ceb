#pragma once

#include <algorithm>
#include <climits>
#include <complex>
#include <stdexcept>
#include <vector>

#include "eud/rational.hpp"
#include "eud/unipoly.hpp"

namespace eud {

/// Numeric options for the simultaneous root iteration.
struct RootOptions {
    Real residual_bound = 1e-10L;  // relative residual accepted per root
    int max_iterations = 400;
    Real step_tolerance = 1e-18L;
};

namespace detail {

inline Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace detail

/// Aberth-Ehrlich simultaneous iteration on long double complexes.
/// Coefficients ascending; leading coefficient must be nonzero.
/// Roots are returned sorted by (real, imaginary).
inline std::vector<Complex> aberth_roots(std::vector<Complex> c,
                                         const RootOptions& opt = {}) {
    while (!c.empty() && std::abs(c.back()) == 0.0L) c.pop_back();
    if (c.size() <= 1) throw std::invalid_argument("indeterminate equation");
    const int deg = static_cast<int>(c.size()) - 1;

    // Strip roots at the origin exactly.
    int zero_roots = 0;
    while (std::abs(c.front()) == 0.0L) {
        c.erase(c.begin());
        ++zero_roots;
    }
    const int d = static_cast<int>(c.size()) - 1;

    std::vector<Complex> z(d);
    if (d > 0) {
        Real scale = 0;
        for (auto& v : c) scale = std::max(scale, std::abs(v));
        for (auto& v : c) v /= scale;
        // Cauchy-style inclusion radius for the initial ring.
        Real r = 0;
        for (int i = 0; i < d; ++i)
            r = std::max(r, std::abs(c[i] / c[d]));
        r = 1 + r;
        r = std::min(r, (Real)1e6L);
        for (int i = 0; i < d; ++i) {
            Real th = 2 * 3.14159265358979323846L * i / d + 0.3973L;
            Real rad = r * (0.4L + 0.6L * (i % 7 + 1) / 7.0L);
            z[i] = std::polar(rad, th);
        }

        std::vector<Complex> dc(d);
        for (int i = 1; i <= d; ++i) dc[i - 1] = c[i] * Real(i);

        for (int iter = 0; iter < opt.max_iterations; ++iter) {
            Real worst = 0;
            for (int i = 0; i < d; ++i) {
                Complex p = detail::horner(c, z[i]);
                Complex dp = detail::horner(dc, z[i]);
                Complex ratio = (std::abs(dp) == 0.0L) ? Complex(0) : p / dp;
                Complex sum{};
                for (int j = 0; j < d; ++j)
                    if (j != i) sum += Complex(1) / (z[i] - z[j]);
                Complex denom = Complex(1) - ratio * sum;
                Complex step =
                    (std::abs(denom) == 0.0L) ? ratio : ratio / denom;
                z[i] -= step;
                Real rel = std::abs(step) / std::max((Real)1.0L, std::abs(z[i]));
                worst = std::max(worst, rel);
            }
            if (worst < opt.step_tolerance) break;
        }
    }

    std::vector<Complex> roots(z.begin(), z.end());
    for (int i = 0; i < zero_roots; ++i) roots.emplace_back(0, 0);
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    if (static_cast<int>(roots.size()) != deg)
        throw std::runtime_error("root count mismatch");
    return roots;
}

/// Relative residual of a root candidate against ascending coefficients.
inline Real root_residual(const std::vector<Complex>& c, Complex z) {
    Complex p = detail::horner(c, z);
    Real scale = 0, zp = 1, az = std::abs(z);
    for (const auto& v : c) {
        scale = std::max(scale, std::abs(v) * zp);
        zp *= std::max((Real)1.0L, az);
    }
    return std::abs(p) / std::max(scale, (Real)1e-300L);
}

inline std::vector<Complex> to_complex_coeffs(const UniPoly& p) {
    std::vector<Complex> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Complex(to_real(p.coeff(int(i))), 0);
    return c;
}

/// Scales arbitrary-size integer coefficients into long double range by a
/// common power of two before conversion.
inline std::vector<Complex> to_complex_coeffs(const std::vector<Integer>& c) {
    long max_exp = LONG_MIN;
    std::vector<std::pair<double, long>> parts(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        signed long e = 0;
        double m = mpz_get_d_2exp(&e, c[i].get_mpz_t());
        parts[i] = {m, e};
        if (m != 0.0) max_exp = std::max(max_exp, (long)e);
    }
    std::vector<Complex> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto [m, e] = parts[i];
        long shift = e - max_exp;
        out[i] = Complex(std::ldexp(static_cast<Real>(m), (int)std::max(shift, (long)-16000)), 0);
    }
    return out;
}

/// All deg(p) roots with multiplicity, residual-checked, deterministically
/// ordered. Throws on the zero polynomial.
inline std::vector<Complex> uni_roots(const UniPoly& p,
                                      const RootOptions& opt = {}) {
    if (p.is_zero()) throw std::invalid_argument("indeterminate equation");
    auto c = to_complex_coeffs(p);
    auto roots = aberth_roots(c, opt);
    for (const auto& r : roots)
        if (root_residual(c, r) > opt.residual_bound)
            throw std::runtime_error("root refinement failed residual bound");
    return roots;
}

}  // namespace eud
