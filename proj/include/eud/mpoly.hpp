#pragma once

#include <map>
#include <span>
#include <vector>

#include "eud/rational.hpp"

namespace eud {

/// Monomial exponent vector; length equals the ambient dimension.
using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& a) {
    int d = 0;
    for (int e : a) d += e;
    return d;
}

/// Multivariate polynomial with exact rational coefficients.
/// Terms are kept in a lexicographically ordered map; zero coefficients
/// are never stored.
class MPoly {
public:
    explicit MPoly(int dimension) : dim_(dimension) {}
    MPoly(int dimension, const Rational& c) : dim_(dimension) {
        if (c != 0) terms_[MultiIndex(dimension, 0)] = c;
    }

    static MPoly monomial(int dimension, MultiIndex alpha, Rational c = 1) {
        MPoly p(dimension);
        if (c != 0) p.terms_[std::move(alpha)] = std::move(c);
        return p;
    }
    /// x_i as a polynomial.
    static MPoly variable(int dimension, int i, Rational c = 1) {
        MultiIndex a(dimension, 0);
        a[i] = 1;
        return monomial(dimension, std::move(a), std::move(c));
    }

    int dimension() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (const auto& [a, c] : terms_) d = std::max(d, total_degree(a));
        return d;
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& [a, c] : terms_) d = std::max(d, a[var]);
        return d;
    }

    Rational coeff(const MultiIndex& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const MultiIndex& a, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(a, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.dim_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                MultiIndex e(ea);
                for (int i = 0; i < a.dim_; ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [a, v] : terms_) v *= c;
        }
        return *this;
    }
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    MPoly operator-() const {
        MPoly r(*this);
        for (auto& [a, v] : r.terms_) v = -v;
        return r;
    }

    bool operator==(const MPoly& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }

    /// d^2/dx_var^2
    MPoly second_derivative(int var) const {
        MPoly r(dim_);
        for (const auto& [a, c] : terms_) {
            if (a[var] < 2) continue;
            MultiIndex e(a);
            e[var] -= 2;
            r.add_term(e, c * a[var] * (a[var] - 1));
        }
        return r;
    }

    template <typename T>
    T eval(std::span<const T> x) const {
        T acc{};
        for (const auto& [a, c] : terms_) {
            T term = convert<T>(c);
            for (int i = 0; i < dim_; ++i)
                for (int k = 0; k < a[i]; ++k) term *= x[i];
            acc += term;
        }
        return acc;
    }
    template <typename T>
    T eval(const std::vector<T>& x) const {
        return eval(std::span<const T>(x));
    }

    Rational eval_exact(const std::vector<Rational>& x) const {
        Rational acc = 0;
        for (const auto& [a, c] : terms_) {
            Rational term = c;
            for (int i = 0; i < dim_; ++i)
                for (int k = 0; k < a[i]; ++k) term *= x[i];
            acc += term;
        }
        return acc;
    }

private:
    template <typename T>
    static T convert(const Rational& q) {
        if constexpr (std::is_same_v<T, Rational>)
            return q;
        else
            return T(to_real(q));
    }

    int dim_;
    std::map<MultiIndex, Rational> terms_;
};

/// Sum of second partials; degree drops by two on homogeneous input.
inline MPoly laplacian(const MPoly& p) {
    MPoly r(p.dimension());
    for (int i = 0; i < p.dimension(); ++i) r += p.second_derivative(i);
    return r;
}

/// All monomial exponent vectors of the given total degree in `dim`
/// variables, lexicographically ordered (deterministic).
inline std::vector<MultiIndex> monomials_of_degree(int dim, int deg) {
    std::vector<MultiIndex> out;
    MultiIndex cur(dim, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == dim - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (dim == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, deg);
    return out;
}

}  // namespace eud
