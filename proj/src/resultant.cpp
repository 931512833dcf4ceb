#include "eud/resultant.hpp"

#include <stdexcept>

namespace eud {

Complex BiPolyZ::eval(const Complex& R, const Complex& w1) const {
    Complex acc{};
    auto sl = slice_at_R(R);
    for (auto it = sl.rbegin(); it != sl.rend(); ++it) acc = acc * w1 + *it;
    return acc;
}

std::vector<Complex> BiPolyZ::slice_at_R(const Complex& R) const {
    std::vector<Complex> out(coeff.size());
    for (std::size_t j = 0; j < coeff.size(); ++j) {
        Complex acc{};
        for (auto it = coeff[j].rbegin(); it != coeff[j].rend(); ++it)
            acc = acc * R + Complex(to_real(*it), 0);
        out[j] = acc;
    }
    return out;
}

BiPolyZ clear_to_integer(const MPoly& p) {
    if (p.dimension() != 2)
        throw std::invalid_argument("clear_to_integer expects (R, w1)");
    Integer lcm = 1;
    for (const auto& [a, c] : p.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    BiPolyZ out;
    out.coeff.assign(p.degree_in(1) + 1,
                     std::vector<Integer>(p.degree_in(0) + 1, Integer(0)));
    Integer content = 0;
    for (const auto& [a, c] : p.terms()) {
        Integer v = c.get_num() * (lcm / c.get_den());
        out.coeff[a[1]][a[0]] = v;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    if (p.is_zero()) out.coeff.clear();
    if (content > 1)
        for (auto& row : out.coeff)
            for (auto& v : row) v /= content;
    return out;
}

int strip_unit_radius_factor(BiPolyZ& p) {
    int removed = 0;
    while (!p.is_zero()) {
        // every row must have remainder 0 at R = 1
        bool divisible = true;
        for (const auto& row : p.coeff) {
            Integer rem = 0;
            for (const auto& v : row) rem += v;
            if (rem != 0) {
                divisible = false;
                break;
            }
        }
        if (!divisible) break;
        for (auto& row : p.coeff) {
            if (row.empty()) continue;
            std::vector<Integer> q(row.size() > 1 ? row.size() - 1 : 0);
            Integer carry = 0;
            for (std::size_t i = row.size(); i-- > 1;) {
                carry += row[i];
                q[i - 1] = carry;
            }
            row = std::move(q);
        }
        ++removed;
        bool all_empty = true;
        for (const auto& row : p.coeff)
            if (!row.empty()) all_empty = false;
        if (all_empty) {
            p.coeff.clear();
            break;
        }
    }
    return removed;
}

bool divide_linear_w1_factor(BiPolyZ& p, const std::vector<Rational>& c0,
                             const Rational& c1) {
    if (p.is_zero()) return false;
    const int dw = p.deg_w1();
    // special case: pure w1 factor (c0 == 0)
    bool c0_zero = true;
    for (const auto& v : c0)
        if (v != 0) c0_zero = false;
    if (c0_zero) {
        if (c1 == 0 || dw < 1) return false;
        for (const auto& v : p.coeff[0])
            if (v != 0) return false;
        p.coeff.erase(p.coeff.begin());
        return true;
    }
    if (dw < 1) return false;
    auto row_poly = [](const std::vector<Integer>& r) {
        std::vector<Rational> v(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) v[i] = Rational(r[i]);
        return UniPoly(std::move(v));
    };
    UniPoly C0{std::vector<Rational>(c0)};
    std::vector<UniPoly> q(dw);
    UniPoly carry = UniPoly::constant(Rational(0));  // q_j from above
    for (int j = dw; j >= 1; --j) {
        UniPoly pj = row_poly(p.coeff[j]);
        q[j - 1] = (pj - C0 * carry) * UniPoly::constant(Rational(1) / c1);
        carry = q[j - 1];
    }
    UniPoly rem = row_poly(p.coeff[0]) - C0 * q[0];
    if (!rem.is_zero()) return false;
    // clear the rational quotient back to content-free integers
    Integer lcm = 1;
    for (const auto& qp : q)
        for (int i = 0; i <= qp.degree(); ++i)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    qp.coeff(i).get_den().get_mpz_t());
    BiPolyZ out;
    out.coeff.resize(dw);
    Integer content = 0;
    for (int j = 0; j < dw; ++j) {
        const UniPoly& qp = q[j];
        out.coeff[j].resize(qp.is_zero() ? 0 : qp.degree() + 1);
        for (int i = 0; i <= qp.degree(); ++i) {
            Rational v = qp.coeff(i) * Rational(lcm);
            out.coeff[j][i] = v.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                    out.coeff[j][i].get_mpz_t());
        }
    }
    if (content > 1)
        for (auto& row : out.coeff)
            for (auto& v : row) v /= content;
    p = std::move(out);
    return true;
}

Integer integer_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// Sylvester matrix entries as univariate integer polynomials in R.
using ZPoly = std::vector<Integer>;

Integer eval_zpoly(const ZPoly& p, long x) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<std::vector<ZPoly>> sylvester_w1(const BiPolyZ& p, const BiPolyZ& q) {
    const int dp = p.deg_w1(), dq = q.deg_w1();
    const int n = dp + dq;
    std::vector<std::vector<ZPoly>> m(n, std::vector<ZPoly>(n));
    for (int r = 0; r < dq; ++r)
        for (int j = 0; j <= dp; ++j) m[r][r + dp - j] = p.coeff[j];
    for (int r = 0; r < dp; ++r)
        for (int j = 0; j <= dq; ++j) m[dq + r][r + dq - j] = q.coeff[j];
    return m;
}

UniPoly interpolate_and_strip(const std::vector<Integer>& values, int npts) {
    // Newton divided differences on nodes 0..npts-1.
    std::vector<Rational> dd(npts);
    for (int i = 0; i < npts; ++i) dd[i] = Rational(values[i]);
    std::vector<Rational> newton(npts);
    newton[0] = dd[0];
    for (int level = 1; level < npts; ++level) {
        for (int i = 0; i + level < npts; ++i)
            dd[i] = (dd[i + 1] - dd[i]) / Rational(level);
        newton[level] = dd[0];
    }
    UniPoly poly = UniPoly::constant(newton[npts - 1]);
    for (int level = npts - 2; level >= 0; --level) {
        UniPoly shifted({-Rational(level), Rational(1)});  // (x - node)
        poly = poly * shifted + UniPoly::constant(newton[level]);
    }
    if (poly.is_zero()) return poly;
    std::vector<Integer> z = poly.cleared();
    std::vector<Rational> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = Rational(z[i]);
    return UniPoly(std::move(out));
}

UniPoly resultant_impl(const BiPolyZ& p, const BiPolyZ& q, bool parallel) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("resultant of the zero polynomial");
    if (p.deg_w1() == 0 || q.deg_w1() == 0) {
        // One argument free of w1: resultant is a power of it.
        const BiPolyZ& cst = p.deg_w1() == 0 ? p : q;
        const BiPolyZ& oth = p.deg_w1() == 0 ? q : p;
        std::vector<Rational> base(cst.coeff[0].size());
        for (std::size_t i = 0; i < base.size(); ++i)
            base[i] = Rational(cst.coeff[0][i]);
        UniPoly b(std::move(base)), r = UniPoly::constant(Rational(1));
        for (int k = 0; k < oth.deg_w1(); ++k) r *= b;
        return r;
    }
    auto syl = sylvester_w1(p, q);
    const int bound =
        q.deg_w1() * std::max(p.deg_R(), 0) + p.deg_w1() * std::max(q.deg_R(), 0);
    const int npts = bound + 1;
    const int n = static_cast<int>(syl.size());
    std::vector<Integer> values(npts);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int t = 0; t < npts; ++t) {
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!syl[i][j].empty()) m[i][j] = eval_zpoly(syl[i][j], t);
        values[t] = integer_determinant(std::move(m));
    }
    return interpolate_and_strip(values, npts);
}

}  // namespace

UniPoly resultant_eliminate_w1(const BiPolyZ& p, const BiPolyZ& q) {
    return resultant_impl(p, q, true);
}

UniPoly resultant_eliminate_w1_serial(const BiPolyZ& p, const BiPolyZ& q) {
    return resultant_impl(p, q, false);
}

}  // namespace eud
