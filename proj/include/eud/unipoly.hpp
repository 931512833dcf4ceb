#pragma once

#include <vector>

#include "eud/rational.hpp"

namespace eud {

/// Univariate polynomial, exact rational coefficients in ascending degree.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        trim();
    }
    static UniPoly constant(Rational v) { return UniPoly({std::move(v)}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
        } else {
            for (auto& v : c_) v *= s;
        }
        return *this;
    }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * long(i);
        return UniPoly(std::move(r));
    }

    /// Antiderivative with zero constant term.
    UniPoly integral() const {
        std::vector<Rational> r(c_.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i + 1] = c_[i] / Rational(long(i) + 1);
        return UniPoly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    template <typename T>
    T eval(const T& x) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + T(to_real(*it));
        return acc;
    }

    /// Integer-coefficient copy scaled by the lcm of denominators, with the
    /// integer content removed.
    std::vector<Integer> cleared() const {
        Integer l = 1;
        for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<Integer> out(c_.size());
        Integer g = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            out[i] = c_[i].get_num() * (l / c_[i].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
        }
        if (g > 1)
            for (auto& v : out) v /= g;
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace eud
