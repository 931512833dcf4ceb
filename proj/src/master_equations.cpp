#include "eud/master_equations.hpp"

#include <stdexcept>

#include "eud/design.hpp"
#include "eud/gegenbauer.hpp"
#include "eud/harmonic.hpp"

namespace eud {

CandidateRange candidate_range(int n) {
    if (n < 2) throw std::invalid_argument("candidate_range: n >= 2 required");
    CandidateRange r;
    r.N = dim_pol_e_S(n, 3, 2, 0);
    r.L_b = spherical_design_lower_bound(n, 4);
    r.U_b = r.N / 2;
    return r;
}

SymbolicScalar moment_a(int l, const CandidateParams& cand) {
    MPoly p(2, Rational(0));
    MultiIndex rl{l, 0};
    p.add_term(rl, Rational(cand.N2));
    if (cand.mode == WeightMode::constant) {
        p.add_term({0, 0}, Rational(cand.N1));
    } else {
        p.add_term({0, 1}, Rational(cand.N1));
    }
    return SymbolicScalar::from_poly(p);
}

namespace {

// ||x||^2 on shell 1 or 2 as a polynomial in (R, w1).
SymbolicScalar shell_norm2(int shell) {
    if (shell == 1) return SymbolicScalar(Rational(1));
    if (shell == 2) return SymbolicScalar::var_R();
    throw std::invalid_argument("shell must be 1 or 2");
}

}  // namespace

SymbolicScalar gram_schmidt_product(int l, int j, int su, int sv,
                                    const CandidateParams& cand) {
    SymbolicScalar al = moment_a(l, cand);
    if (j == 0) return SymbolicScalar(Rational(1)) / al;
    if (j != 1) throw std::invalid_argument("p = 2 allows j in {0, 1}");
    SymbolicScalar al1 = moment_a(l + 1, cand);
    SymbolicScalar al2 = moment_a(l + 2, cand);
    SymbolicScalar gram_det = al * al2 - al1 * al1;
    if (gram_det.is_zero()) throw std::domain_error("degenerate radii");
    SymbolicScalar fu = al * shell_norm2(su) - al1;
    SymbolicScalar fv = al * shell_norm2(sv) - al1;
    return fu * fv / (al * gram_det);
}

int radial_index_bound(int l) {
    // e = 3, p = 2, eps_S = 0: min{p - eps - 1, floor((e - l)/2)}, and for
    // l = 0 min{p - 1, floor(e/2)}.
    if (l == 0) return 1;
    return std::min(1, (3 - l) / 2);
}

long eq27_term_count(int n) {
    long count = 0;
    for (int l = 0; l <= 3; ++l)
        count += (radial_index_bound(l) + 1) * harm_dim(n, l);
    return count;
}

SymbolicScalar eq27_lhs(int shell, const CandidateParams& cand) {
    SymbolicScalar rho = shell_norm2(shell);
    SymbolicScalar acc(Rational(0));
    for (int j = 0; j <= radial_index_bound(0); ++j)
        acc = acc + gram_schmidt_product(0, j, shell, shell, cand);
    SymbolicScalar rho_l(Rational(1));
    for (int l = 1; l <= 3; ++l) {
        rho_l = rho_l * rho;
        SymbolicScalar g(Rational(0));
        for (int j = 0; j <= radial_index_bound(l); ++j)
            g = g + gram_schmidt_product(l, j, shell, shell, cand);
        acc = acc + rho_l * g * SymbolicScalar(Rational(harm_dim(cand.n, l)));
    }
    return acc;
}

std::array<SymbolicScalar, 4> gamma_poly_coeffs(int shell,
                                                const CandidateParams& cand) {
    SymbolicScalar rho = shell_norm2(shell);
    std::array<SymbolicScalar, 4> c{SymbolicScalar(Rational(0)),
                                    SymbolicScalar(Rational(0)),
                                    SymbolicScalar(Rational(0)),
                                    SymbolicScalar(Rational(0))};
    for (int j = 0; j <= radial_index_bound(0); ++j)
        c[0] = c[0] + gram_schmidt_product(0, j, shell, shell, cand);
    SymbolicScalar rho_l(Rational(1));
    for (int l = 1; l <= 3; ++l) {
        rho_l = rho_l * rho;  // ||u||^l ||v||^l on a common shell
        SymbolicScalar g(Rational(0));
        for (int j = 0; j <= radial_index_bound(l); ++j)
            g = g + gram_schmidt_product(l, j, shell, shell, cand);
        UniPoly Q = gegenbauer(cand.n, l);
        for (int k = 0; k <= Q.degree(); ++k) {
            if (Q.coeff(k) == 0) continue;
            c[k] = c[k] + rho_l * g * SymbolicScalar(Q.coeff(k));
        }
    }
    return c;
}

namespace {

// a_l, rho, and the Gram determinants as honest polynomials in (R, w1).
MPoly moment_poly(int l, const CandidateParams& cand) {
    MPoly p(2, Rational(0));
    p.add_term({l, 0}, Rational(cand.N2));
    if (cand.mode == WeightMode::constant)
        p.add_term({0, 0}, Rational(cand.N1));
    else
        p.add_term({0, 1}, Rational(cand.N1));
    return p;
}

MPoly rho_poly(int shell) {
    MPoly p(2, Rational(0));
    if (shell == 1)
        p.add_term({0, 0}, Rational(1));
    else if (shell == 2)
        p.add_term({1, 0}, Rational(1));
    else
        throw std::invalid_argument("shell must be 1 or 2");
    return p;
}

struct ClearedParts {
    std::array<MPoly, 4> a;   // a_0..a_3
    MPoly a4;                 // a_4 (not part of D)
    MPoly g02, g13, g24;      // Gram determinants a_l a_{l+2} - a_{l+1}^2
    MPoly D;                  // common denominator a0 a1 a2 a3 g02 g13

    explicit ClearedParts(const CandidateParams& cand)
        : a{moment_poly(0, cand), moment_poly(1, cand), moment_poly(2, cand),
            moment_poly(3, cand)},
          a4(moment_poly(4, cand)),
          g02(a[0] * a[2] - a[1] * a[1]),
          g13(a[1] * a[3] - a[2] * a[2]),
          g24(a[2] * a4 - a[3] * a[3]),
          D(a[0] * a[1] * a[2] * a[3] * g02 * g13) {}

    // D * g_{l,j}(u) g_{l,j}(v) for j <= radial_index_bound(l) <= 1.
    MPoly product(int l, int j, const MPoly& rho_u, const MPoly& rho_v) const {
        if (j == 0) {
            // D / a_l
            MPoly q(2, Rational(1));
            for (int k = 0; k < 4; ++k)
                if (k != l) q = q * a[k];
            return q * g02 * g13;
        }
        // j == 1: (a_l rho_u - a_{l+1})(a_l rho_v - a_{l+1}) / (a_l G_l)
        const MPoly& G = l == 0 ? g02 : g13;  // only l in {0, 1} reach j = 1
        MPoly q(2, Rational(1));
        for (int k = 0; k < 4; ++k)
            if (k != l) q = q * a[k];
        q = q * (l == 0 ? g13 : g02);
        MPoly fu = a[l] * rho_u - a[l + 1];
        MPoly fv = a[l] * rho_v - a[l + 1];
        return q * fu * fv;
    }
};

}  // namespace

MPoly eq27_poly(int shell, const CandidateParams& cand) {
    ClearedParts cp(cand);
    MPoly rho = rho_poly(shell);
    MPoly S(2, Rational(0));
    MPoly rho_l(2, Rational(1));
    for (int j = 0; j <= radial_index_bound(0); ++j)
        S = S + cp.product(0, j, rho, rho);
    for (int l = 1; l <= 3; ++l) {
        rho_l = rho_l * rho;
        MPoly g(2, Rational(0));
        for (int j = 0; j <= radial_index_bound(l); ++j)
            g = g + cp.product(l, j, rho, rho);
        S = S + rho_l * g * MPoly(2, Rational(harm_dim(cand.n, l)));
    }
    // lhs = 1/w(u): multiply through by w(u), which is w1 only on the first
    // shell in non-constant mode.
    if (cand.mode == WeightMode::nonconstant && shell == 1) {
        MPoly w1(2, Rational(0));
        w1.add_term({0, 1}, Rational(1));
        S = w1 * S;
    }
    return S - cp.D;
}

std::array<MPoly, 4> gamma_poly_cleared(int shell, const CandidateParams& cand) {
    ClearedParts cp(cand);
    MPoly rho = rho_poly(shell);
    std::array<MPoly, 4> c{MPoly(2, Rational(0)), MPoly(2, Rational(0)),
                           MPoly(2, Rational(0)), MPoly(2, Rational(0))};
    for (int j = 0; j <= radial_index_bound(0); ++j)
        c[0] = c[0] + cp.product(0, j, rho, rho);
    MPoly rho_l(2, Rational(1));
    for (int l = 1; l <= 3; ++l) {
        rho_l = rho_l * rho;
        MPoly g(2, Rational(0));
        for (int j = 0; j <= radial_index_bound(l); ++j)
            g = g + cp.product(l, j, rho, rho);
        UniPoly Q = gegenbauer(cand.n, l);
        for (int k = 0; k <= Q.degree(); ++k) {
            if (Q.coeff(k) == 0) continue;
            c[k] = c[k] + rho_l * g * MPoly(2, Q.coeff(k));
        }
    }
    return c;
}

UniPoly eq28_gamma_poly(int shell, const CandidateParams& cand,
                        const Rational& R, const Rational& w1) {
    auto c = gamma_poly_coeffs(shell, cand);
    std::vector<Rational> coeffs(4);
    for (int k = 0; k < 4; ++k) coeffs[k] = c[k].eval_exact(R, w1);
    return UniPoly(std::move(coeffs));
}

std::array<Complex, 4> eq28_gamma_coeffs(int shell, const CandidateParams& cand,
                                         const Complex& R, const Complex& w1) {
    auto c = gamma_poly_coeffs(shell, cand);
    std::array<Complex, 4> out;
    for (int k = 0; k < 4; ++k) out[k] = c[k].eval(R, w1);
    return out;
}

}  // namespace eud
