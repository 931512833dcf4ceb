#pragma once

#include <stdexcept>
#include <vector>

#include "eud/mpoly.hpp"
#include "eud/rational.hpp"
#include "eud/unipoly.hpp"

namespace eud {

/// Rational function in the unknowns R (square of the second radius,
/// variable 0) and w1 (first-shell weight, variable 1), with exact
/// rational coefficients.
class SymbolicScalar {
public:
    SymbolicScalar() : num_(2), den_(2, Rational(1)) {}
    explicit SymbolicScalar(Rational c) : num_(2, std::move(c)), den_(2, Rational(1)) {}
    SymbolicScalar(MPoly num, MPoly den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("zero denominator");
        normalize();
    }

    static SymbolicScalar var_R() { return {MPoly::variable(2, 0), MPoly(2, 1)}; }
    static SymbolicScalar var_w1() { return {MPoly::variable(2, 1), MPoly(2, 1)}; }
    static SymbolicScalar from_poly(MPoly p) { return {std::move(p), MPoly(2, 1)}; }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    SymbolicScalar operator+(const SymbolicScalar& o) const {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }
    SymbolicScalar operator-(const SymbolicScalar& o) const {
        return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
    }
    SymbolicScalar operator*(const SymbolicScalar& o) const {
        return {num_ * o.num_, den_ * o.den_};
    }
    SymbolicScalar operator/(const SymbolicScalar& o) const {
        if (o.num_.is_zero()) throw std::invalid_argument("division by zero");
        return {num_ * o.den_, den_ * o.num_};
    }
    SymbolicScalar operator-() const { return {-num_, den_}; }

    /// Exact evaluation at a rational point.
    Rational eval_exact(const Rational& R, const Rational& w1) const {
        Rational d = den_.eval_exact({R, w1});
        if (d == 0) throw std::domain_error("pole at evaluation point");
        return num_.eval_exact({R, w1}) / d;
    }
    Complex eval(const Complex& R, const Complex& w1) const {
        std::vector<Complex> pt{R, w1};
        Complex d = den_.eval(pt);
        return num_.eval(pt) / d;
    }

private:
    // Keep the fraction tame: divide both parts by the rational content of
    // the denominator's leading term so repeated ops do not balloon.
    void normalize() {
        if (num_.is_zero()) {
            den_ = MPoly(2, Rational(1));
            return;
        }
        const auto& lead = den_.terms().begin()->second;
        if (lead != 1) {
            Rational inv = 1 / lead;
            num_ *= inv;
            den_ *= inv;
        }
    }

    MPoly num_, den_;
};

}  // namespace eud
