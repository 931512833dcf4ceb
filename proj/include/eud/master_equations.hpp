#pragma once

#include <array>
#include <vector>

#include "eud/symbolic.hpp"
#include "eud/unipoly.hpp"

namespace eud {

enum class WeightMode { constant, nonconstant };

/// One classification candidate: a putative tight 6-design on two shells
/// with N1 points at radius 1 and N2 at radius sqrt(R).
struct CandidateParams {
    int n = 0;
    long N = 0, N1 = 0, N2 = 0;
    WeightMode mode = WeightMode::constant;
};

struct CandidateRange {
    long N = 0, L_b = 0, U_b = 0;
};

/// N = dim Pol_3(S), L_b = spherical 4-design bound, U_b = floor(N/2).
CandidateRange candidate_range(int n);

/// a_l = sum_x w(x) ||x||^{2l}; constant mode N1 + N2 R^l,
/// non-constant mode N1 w1 + N2 R^l (second-shell weight normalized to 1).
SymbolicScalar moment_a(int l, const CandidateParams& cand);

/// Product g_{l,j}(u) g_{l,j}(v) for shells su, sv in {1, 2} (||x||^2 = 1 or
/// R); same-index products make every square root cancel.
SymbolicScalar gram_schmidt_product(int l, int j, int su, int sv,
                                    const CandidateParams& cand);

/// Admissible j range per harmonic degree for e = 3, p = 2, eps_S = 0.
int radial_index_bound(int l);

/// Number of basis functions counted by the left-hand side of the weight
/// equation; equals C(n+3, 3).
long eq27_term_count(int n);

/// Left-hand side of the tight-design weight equation on the given shell,
/// as a rational function of (R, w1). Equals 1/w(u) on a tight design.
SymbolicScalar eq27_lhs(int shell, const CandidateParams& cand);

/// Coefficients c_0..c_3 (in gamma) of the same-shell annihilator
/// polynomial whose roots are the admissible normalized inner products.
std::array<SymbolicScalar, 4> gamma_poly_coeffs(int shell,
                                                const CandidateParams& cand);

/// Weight equation on the given shell cleared to a polynomial identity
/// w(u) * lhs * D - D = 0 over the explicit common denominator
/// D = a0 a1 a2 a3 (a0 a2 - a1^2)(a1 a3 - a2^2). No spurious factors are
/// introduced, unlike clearing the generic rational-function form.
MPoly eq27_poly(int shell, const CandidateParams& cand);

/// Gamma-annihilator coefficients multiplied by the same denominator D,
/// as honest polynomials in (R, w1); the cubic D*C(gamma) they define has
/// the same roots as eq28_gamma_poly away from D = 0.
std::array<MPoly, 4> gamma_poly_cleared(int shell, const CandidateParams& cand);

/// Degree-3 polynomial in gamma at an exact rational point (same shell).
UniPoly eq28_gamma_poly(int shell, const CandidateParams& cand,
                        const Rational& R, const Rational& w1);

/// Numeric gamma polynomial at a (possibly complex) point.
std::array<Complex, 4> eq28_gamma_coeffs(int shell, const CandidateParams& cand,
                                         const Complex& R, const Complex& w1);

}  // namespace eud
