#include "eud/harmonic.hpp"

#include <stdexcept>

namespace eud {

namespace {

// Laplacian in the first n-1 variables only.
MPoly laplacian_head(const MPoly& p, int n) {
    MPoly r(p.dimension());
    for (int i = 0; i < n - 1; ++i) r += p.second_derivative(i);
    return r;
}

// Harmonic extension of (c_0, c_1) given in the x' variables.
MPoly extend(MPoly c, int start, int n, int l) {
    MPoly p(n);
    int k = start;
    while (!c.is_zero() && k <= l) {
        MPoly lifted(n);
        for (const auto& [a, coef] : c.terms()) {
            MultiIndex e(a);
            e[n - 1] = k;
            lifted.add_term(e, coef);
        }
        p += lifted;
        c = laplacian_head(c, n) * Rational(-1, long(k + 1) * (k + 2));
        k += 2;
    }
    return p;
}

}  // namespace

std::vector<MPoly> harmonic_basis(int n, int l) {
    if (n < 2 || l < 0) throw std::invalid_argument("harmonic_basis: bad arguments");
    std::vector<MPoly> basis;
    basis.reserve(static_cast<std::size_t>(harm_dim(n, l)));
    for (int start : {0, 1}) {
        int head_deg = l - start;
        if (head_deg < 0) continue;
        for (const auto& mono : monomials_of_degree(n - 1, head_deg)) {
            MPoly c0(n);
            MultiIndex full(n, 0);
            for (int i = 0; i < n - 1; ++i) full[i] = mono[i];
            c0.add_term(full, Rational(1));
            basis.push_back(extend(c0, start, n, l));
        }
    }
    return basis;
}

}  // namespace eud
