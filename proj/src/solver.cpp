#include "eud/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eud/resultant.hpp"

namespace eud {

namespace {

constexpr Real kRealImagTol = 1e-7L;
constexpr Real kResidualTol = 1e-8L;
constexpr Real kRadiusOneTol = 1e-6L;

// Removes the structural factors every cleared master-equation numerator
// carries: (R-1)^k (degenerate radii), w1^k (zero first-shell weight), and
// the degenerate-moment loci a_0 = 0 and a_1 = 0. Without this, both
// equations share these factors and every resultant degenerates to zero.
void strip_structural_factors(BiPolyZ& p, const CandidateParams& cand) {
    strip_unit_radius_factor(p);
    if (cand.mode != WeightMode::nonconstant) return;
    while (divide_linear_w1_factor(p, {Rational(0)}, Rational(1))) {
    }
    // a_0 = N2 + N1 w1, a_1 = N2 R + N1 w1
    while (divide_linear_w1_factor(p, {Rational(cand.N2)}, Rational(cand.N1))) {
    }
    while (divide_linear_w1_factor(p, {Rational(0), Rational(cand.N2)},
                                   Rational(cand.N1))) {
    }
    strip_unit_radius_factor(p);
}

// Cleared weight equation on a shell with structural factors removed so
// elimination sees the genuine variety only.
BiPolyZ cleared_eq27(int shell, const CandidateParams& cand) {
    BiPolyZ p = clear_to_integer(eq27_poly(shell, cand));
    strip_structural_factors(p, cand);
    return p;
}

std::vector<Complex> complex_slice_roots(const BiPolyZ& p, const Complex& R) {
    auto c = p.slice_at_R(R);
    // strip negligible leading coefficients relative to the largest
    Real top = 0;
    for (const auto& v : c) top = std::max(top, std::abs(v));
    if (top == 0) return {};
    while (c.size() > 1 && std::abs(c.back()) < 1e-14L * top) c.pop_back();
    if (c.size() <= 1) return {};
    return aberth_roots(c);
}

// Residual relative to the largest monomial magnitude at the point, so
// evaluations near a degenerate locus (where the leading terms collapse)
// are not accepted for free.
Real relative_residual(const BiPolyZ& p, const Complex& R, const Complex& w1) {
    Real aR = std::abs(R), aw = std::abs(w1);
    Complex val{};
    Real scale = 0, wpow_a = 1;
    Complex wpow{1, 0};
    for (const auto& row : p.coeff) {
        Complex rpow{1, 0};
        Real rpow_a = 1;
        for (const auto& c : row) {
            Real ac = std::abs(to_real(c));
            val += Complex(to_real(c), 0) * rpow * wpow;
            scale = std::max(scale, ac * rpow_a * wpow_a);
            rpow *= R;
            rpow_a *= aR;
        }
        wpow *= w1;
        wpow_a *= aw;
    }
    return std::abs(val) / std::max(scale, (Real)1e-300L);
}

BiPolyZ d_dR(const BiPolyZ& p) {
    BiPolyZ d;
    d.coeff.resize(p.coeff.size());
    for (std::size_t j = 0; j < p.coeff.size(); ++j)
        for (std::size_t i = 1; i < p.coeff[j].size(); ++i)
            d.coeff[j].push_back(p.coeff[j][i] * long(i));
    return d;
}

BiPolyZ d_dw1(const BiPolyZ& p) {
    BiPolyZ d;
    if (p.coeff.size() <= 1) {
        d.coeff.assign(1, {Integer(0)});
        return d;
    }
    d.coeff.assign(p.coeff.begin() + 1, p.coeff.end());
    for (std::size_t j = 0; j < d.coeff.size(); ++j)
        for (auto& v : d.coeff[j]) v *= long(j + 1);
    return d;
}

// A couple of damped Newton steps on the 2x2 system sharpen the point for
// the downstream triple evaluation.
void polish(const BiPolyZ& f, const BiPolyZ& g, Complex& R, Complex& w1) {
    BiPolyZ fr = d_dR(f), fw = d_dw1(f), gr = d_dR(g), gw = d_dw1(g);
    for (int it = 0; it < 24; ++it) {
        Complex F = f.eval(R, w1), G = g.eval(R, w1);
        Complex a = fr.eval(R, w1), b = fw.eval(R, w1);
        Complex c = gr.eval(R, w1), d = gw.eval(R, w1);
        Complex det = a * d - b * c;
        if (std::abs(det) < 1e-280L) return;
        Complex dR = (F * d - b * G) / det;
        Complex dw = (a * G - F * c) / det;
        R -= dR;
        w1 -= dw;
        if (std::abs(dR) <= 1e-17L * std::max((Real)1.0L, std::abs(R)) &&
            std::abs(dw) <= 1e-17L * std::max((Real)1.0L, std::abs(w1)))
            break;
    }
}

InnerProductTriple shell1_triple(const CandidateParams& cand, const Complex& R,
                                 const Complex& w1) {
    auto c = eq28_gamma_coeffs(1, cand, R, w1);
    std::vector<Complex> coeffs(c.begin(), c.end());
    auto roots = aberth_roots(coeffs);
    InnerProductTriple t;
    if (roots.size() != 3) return t;  // degenerate leading coefficient
    t.all_real = true;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(roots[i].imag()) <= kRealImagTol)
            roots[i] = Complex(roots[i].real(), 0);
        else
            t.all_real = false;
    }
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::copy(roots.begin(), roots.end(), t.values.begin());
    return t;
}

bool nearly_equal(const Complex& a, const Complex& b, Real tol) {
    return std::abs(a.real() - b.real()) <= tol &&
           std::abs(a.imag() - b.imag()) <= tol;
}

// Collect the consistent points of {f = 0, g = 0} by eliminating w1. When
// f encodes an imposed inner product, the point is only kept if that value
// actually shows up among the shell-1 roots, which discards stray
// near-degenerate points the elimination can produce.
std::vector<SystemSolution> solve_pair(const CandidateParams& cand,
                                       const BiPolyZ& f, const BiPolyZ& g,
                                       const Rational* imposed = nullptr) {
    std::vector<SystemSolution> out;
    UniPoly res = resultant_eliminate_w1(f, g);
    if (res.is_zero()) return out;  // caller handles the family case
    std::vector<Complex> r_candidates;
    if (res.degree() >= 1) {
        try {
            r_candidates = aberth_roots(to_complex_coeffs(res.cleared()));
        } catch (const std::exception&) {
            return out;
        }
    }
    for (const auto& R0 : r_candidates) {
        for (const auto& w0 : complex_slice_roots(g, R0)) {
            Complex R = R0, w1 = w0;
            polish(f, g, R, w1);
            if (relative_residual(f, R, w1) > kResidualTol) continue;
            if (relative_residual(g, R, w1) > kResidualTol) continue;
            SystemSolution s;
            s.R = R;
            s.w1 = w1;
            bool realR = std::abs(R.imag()) <= kRealImagTol * std::max((Real)1.0L, std::abs(R));
            bool realw = std::abs(w1.imag()) <= kRealImagTol * std::max((Real)1.0L, std::abs(w1));
            if (realR) s.R = Complex(R.real(), 0);
            if (realw) s.w1 = Complex(w1.real(), 0);
            s.real_admissible = realR && realw && R.real() > 1e-9L &&
                                std::abs(R.real() - 1) > kRadiusOneTol &&
                                w1.real() > 1e-9L;
            // skip parameter-degenerate points
            if (std::abs(s.R - Complex(1, 0)) <= kRadiusOneTol) continue;
            if (std::abs(s.R) <= 1e-9L || std::abs(s.w1) <= 1e-9L) continue;
            bool dup = false;
            for (const auto& seen : out)
                if (nearly_equal(seen.R, s.R, 1e-6L) &&
                    nearly_equal(seen.w1, s.w1, 1e-6L))
                    dup = true;
            if (dup) continue;
            s.shell1 = shell1_triple(cand, s.R, s.w1);
            if (imposed) {
                Real target = to_real(*imposed);
                Real best = std::numeric_limits<Real>::infinity();
                for (const auto& v : s.shell1.values)
                    best = std::min(best, std::abs(v - Complex(target, 0)));
                if (best > 1e-6L * std::max((Real)1.0L, std::abs(target)))
                    continue;
            }
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const SystemSolution& a, const SystemSolution& b) {
        if (a.R.real() != b.R.real()) return a.R.real() < b.R.real();
        return a.R.imag() < b.R.imag();
    });
    return out;
}

}  // namespace

bool triple_matches(const InnerProductTriple& t,
                    const std::vector<Rational>& set, Real tol) {
    if (set.size() != 3) return false;
    std::array<int, 3> perm = {0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (int i = 0; i < 3; ++i) {
            Real target = to_real(set[i]);
            const Complex& v = t.values[perm[i]];
            if (std::abs(v.real() - target) > tol || std::abs(v.imag()) > tol)
                ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

ConstantSolve solve_constant(const CandidateParams& cand, Real tol) {
    CandidateParams c = cand;
    c.mode = WeightMode::constant;
    BiPolyZ p1 = cleared_eq27(1, c), p2 = cleared_eq27(2, c);

    ConstantSolve out;
    // constant mode is univariate in R
    std::vector<Complex> c1;
    if (!p1.is_zero()) {
        std::vector<Complex> coeffs;
        for (const auto& v : p1.coeff[0]) coeffs.push_back(Complex(to_real(v), 0));
        c1 = aberth_roots(coeffs);
    }
    for (const auto& z : c1) {
        if (std::abs(z.imag()) > kRealImagTol) continue;
        Real R = z.real();
        if (relative_residual(p2, Complex(R, 0), Complex(1, 0)) > tol) continue;
        if (R <= 1e-9L) continue;
        if (std::abs(R - 1) <= kRadiusOneTol) continue;
        bool dup = false;
        for (const auto& s : out.solutions)
            if (std::abs(s.first - R) <= 1e-9L * std::max((Real)1.0L, std::abs(R)))
                dup = true;
        if (dup) continue;
        out.solutions.emplace_back(R, shell1_triple(c, Complex(R, 0), Complex(1, 0)));
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.radius_degenerate = out.solutions.empty();
    return out;
}

NonconstantSolve solve_nonconstant(const CandidateParams& cand,
                                   const std::vector<FeasibleSet>& feasible,
                                   MatchPartner partner, Real match_tol) {
    CandidateParams c = cand;
    c.mode = WeightMode::nonconstant;
    BiPolyZ p1 = cleared_eq27(1, c);  // w1 * lhs = 1 on shell 1
    BiPolyZ p2 = cleared_eq27(2, c);  // lhs = 1 on shell 2

    NonconstantSolve out;
    // The two weight-equation instances are algebraically dependent: summing
    // Eq 2.7 over X with weights is the orthonormality trace, so
    // N1 (w1 lhs1 - 1) + N2 (lhs2 - 1) = 0 identically and the simultaneous
    // system is rank 1 -- a one-parameter curve w1(R), never a finite set.
    UniPoly res = resultant_eliminate_w1(p1, p2);
    if (res.is_zero()) {
        out.family = true;
        // Sample the curve and read off the weight-radius relation.
        bool power_law = true;
        for (Real R : {4.0L, 9.0L, 6.25L}) {
            Real best_w = -1;
            for (const auto& w : complex_slice_roots(p2, Complex(R, 0))) {
                if (std::abs(w.imag()) > kRealImagTol || w.real() <= 0) continue;
                if (relative_residual(p1, Complex(R, 0), w) > kResidualTol) continue;
                best_w = w.real();
            }
            if (best_w > 0) {
                out.family_samples.emplace_back(R, best_w);
                if (std::abs(best_w * best_w - std::pow(R, (Real)5)) >
                    1e-6L * std::pow(R, (Real)5))
                    power_law = false;
            }
        }
        if (!out.family_samples.empty() && power_law)
            out.family_relation = "w1^2 = R^5";
    } else {
        out.simultaneous = solve_pair(c, p1, p2);
    }

    // Match-driven route: impose alpha_1 = f together with one instance of
    // the weight equation.
    const BiPolyZ& partner_poly =
        partner == MatchPartner::shell1_equation ? p1 : p2;
    auto gamma = gamma_poly_cleared(1, c);
    for (std::size_t si = 0; si < feasible.size(); ++si) {
        for (const Rational& f : feasible[si].values) {
            MatchAttempt att;
            att.imposed_value = f;
            att.set_index = static_cast<int>(si);
            // C(f; R, w1) = 0
            MPoly cf(2, Rational(0));
            Rational fp = 1;
            for (int k = 0; k < 4; ++k) {
                cf = cf + gamma[k] * MPoly(2, fp);
                fp *= f;
            }
            BiPolyZ cfz = clear_to_integer(cf);
            strip_structural_factors(cfz, c);
            if (!cfz.is_zero())
                att.solutions = solve_pair(c, cfz, partner_poly, &f);
            for (std::size_t k = 0; k < att.solutions.size(); ++k) {
                if (!att.solutions[k].real_admissible) continue;
                if (triple_matches(att.solutions[k].shell1, feasible[si].values,
                                   match_tol)) {
                    att.matched = true;
                    att.matched_solution = static_cast<int>(k);
                    if (!out.matched_set) out.matched_set = static_cast<int>(si);
                }
            }
            out.attempts.push_back(std::move(att));
        }
    }
    return out;
}

}  // namespace eud
