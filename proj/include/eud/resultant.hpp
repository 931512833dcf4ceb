#pragma once

#include <vector>

#include "eud/mpoly.hpp"
#include "eud/rational.hpp"
#include "eud/roots.hpp"
#include "eud/unipoly.hpp"

namespace eud {

/// Bivariate polynomial with integer coefficients in (R, w1);
/// coeff[j][i] multiplies w1^j R^i.
struct BiPolyZ {
    std::vector<std::vector<Integer>> coeff;

    int deg_w1() const { return static_cast<int>(coeff.size()) - 1; }
    int deg_R() const {
        int d = -1;
        for (const auto& row : coeff)
            d = std::max(d, static_cast<int>(row.size()) - 1);
        return d;
    }
    bool is_zero() const { return coeff.empty(); }

    Complex eval(const Complex& R, const Complex& w1) const;
    /// Coefficients in w1 after substituting a numeric R (ascending).
    std::vector<Complex> slice_at_R(const Complex& R) const;
};

/// Clears denominators of an exact-rational bivariate polynomial
/// (variables: 0 = R, 1 = w1) and strips integer content.
BiPolyZ clear_to_integer(const MPoly& p);

/// Resultant of p and q with respect to w1: a univariate polynomial in R,
/// computed exactly as the Sylvester determinant via evaluation at integer
/// nodes plus Newton interpolation. Integer coefficients, content removed.
/// A structurally zero resultant (common factor) returns the zero poly.
UniPoly resultant_eliminate_w1(const BiPolyZ& p, const BiPolyZ& q);
UniPoly resultant_eliminate_w1_serial(const BiPolyZ& p, const BiPolyZ& q);

/// Divides out every full power of (R - 1) shared by all coefficients
/// (exact synthetic division); returns the multiplicity removed. The
/// master-equation numerators always vanish along R = 1 (degenerate
/// radii), and the factor must go before elimination or every resultant
/// degenerates.
int strip_unit_radius_factor(BiPolyZ& p);

/// Exact trial division by c0(R) + c1 * w1 (c0 ascending in R); divides
/// once if the remainder vanishes. Used to remove the structural
/// degenerate-moment loci a_0 = 0, a_1 = 0, and w1 = 0 shared by the
/// cleared master equations.
bool divide_linear_w1_factor(BiPolyZ& p, const std::vector<Rational>& c0,
                             const Rational& c1);

/// Exact determinant of a rational matrix (Bareiss on cleared integers).
Integer integer_determinant(std::vector<std::vector<Integer>> m);

}  // namespace eud
