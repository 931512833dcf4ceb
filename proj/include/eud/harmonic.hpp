#pragma once

#include <vector>

#include "eud/mpoly.hpp"
#include "eud/rational.hpp"

namespace eud {

/// dim Harm_l(R^n) = C(n+l-1, n-1) - C(n+l-3, n-1).
inline long harm_dim(int n, int l) {
    if (l == 0) return 1;
    long a = binomial_l(n + l - 1, n - 1);
    long b = l >= 2 ? binomial_l(n + l - 3, n - 1) : 0;
    return a - b;
}

/// Exact rational basis of ker(laplacian) on Hom_l(R^n).
///
/// Each basis element is reconstructed from its two lowest coefficients in
/// the last variable: writing p = sum_k c_k(x') x_n^k, harmonicity forces
/// c_{k+2} = -Lap'(c_k) / ((k+1)(k+2)), so picking c_0 (degree l) or c_1
/// (degree l-1) as a single monomial in x' yields harm_dim(n, l) kernel
/// elements whose minimal x_n-terms are pairwise distinct (an echelon set
/// under the x_n-graded lexicographic order, hence deterministic).
std::vector<MPoly> harmonic_basis(int n, int l);

}  // namespace eud
