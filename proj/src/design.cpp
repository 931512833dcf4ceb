#include "eud/design.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "eud/harmonic.hpp"
#include "eud/moments.hpp"
#include "eud/mpoly.hpp"

namespace eud {

namespace {

Real norm_of(const std::vector<Real>& v) {
    Real s = 0;
    for (Real x : v) s += x * x;
    return std::sqrt(s);
}

Real dist(const std::vector<Real>& a, const std::vector<Real>& b) {
    Real s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

// Clusters scalar values by transitive closure of the tolerance relation.
// Returns cluster representative per input index plus sorted cluster values.
std::pair<std::vector<int>, std::vector<Real>> cluster(
    const std::vector<Real>& vals, Real tol) {
    std::vector<std::size_t> order(vals.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<int> label(vals.size(), -1);
    std::vector<Real> reps;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && vals[order[k]] - vals[order[k - 1]] <= tol) {
            label[order[k]] = label[order[k - 1]];
        } else {
            label[order[k]] = static_cast<int>(reps.size());
            reps.push_back(0);
        }
    }
    // representative = mean of the cluster
    std::vector<Real> sum(reps.size(), 0);
    std::vector<long> cnt(reps.size(), 0);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        sum[label[i]] += vals[i];
        cnt[label[i]] += 1;
    }
    for (std::size_t c = 0; c < reps.size(); ++c) reps[c] = sum[c] / cnt[c];
    return {label, reps};
}

}  // namespace

void WeightedPointSet::validate(Real duplicate_tol) const {
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
    if (points.size() != weights.size())
        throw std::invalid_argument("points/weights length mismatch");
    for (Real w : weights)
        if (!(w > 0)) throw std::invalid_argument("weights must be positive");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dimension)
            throw std::invalid_argument("point dimension mismatch");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (dist(points[i], points[j]) <= duplicate_tol)
                throw std::invalid_argument("duplicate points");
}

ShellDecomposition shells(const WeightedPointSet& X, Real tol) {
    std::vector<Real> norms(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) norms[i] = norm_of(X.points[i]);
    auto [label, reps] = cluster(norms, tol);
    ShellDecomposition d;
    d.radii = reps;
    d.shells.assign(reps.size(), {});
    d.shell_weights.assign(reps.size(), 0);
    for (std::size_t i = 0; i < X.size(); ++i) {
        d.shells[label[i]].push_back(static_cast<int>(i));
        d.shell_weights[label[i]] += X.weights[i];
    }
    d.epsilon_S = (!reps.empty() && reps.front() <= tol) ? 1 : 0;
    if (d.epsilon_S) d.radii.front() = 0;
    return d;
}

namespace {

// One monomial comparison; returns the relative residual.
Real moment_residual(const WeightedPointSet& X, const ShellDecomposition& sh,
                     const MultiIndex& alpha, int deg) {
    Real lhs = 0, scale = 0;
    Rational m = sphere_moment(alpha, X.dimension);
    if (m != 0) {
        Real mv = to_real(m);
        for (int s = 0; s < sh.count(); ++s) {
            Real term = sh.shell_weights[s] * std::pow(sh.radii[s], (Real)deg) * mv;
            if (sh.radii[s] == 0)  // zero-radius shell integrates to f(0)
                term = deg == 0 ? sh.shell_weights[s] : 0;
            lhs += term;
            scale = std::max(scale, std::abs(term));
        }
    }
    Real rhs = 0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        Real mono = 1;
        for (int k = 0; k < X.dimension; ++k)
            for (int e = 0; e < alpha[k]; ++e) mono *= X.points[i][k];
        Real term = X.weights[i] * mono;
        rhs += term;
        scale = std::max(scale, std::abs(term));
    }
    return std::abs(lhs - rhs) / std::max(scale, (Real)1.0L);
}

std::vector<MultiIndex> all_monomials_up_to(int dim, int t) {
    std::vector<MultiIndex> out;
    for (int d = 0; d <= t; ++d) {
        auto m = monomials_of_degree(dim, d);
        out.insert(out.end(), m.begin(), m.end());
    }
    return out;
}

}  // namespace

VerifyResult verify_design_moments_serial(const WeightedPointSet& X, int t,
                                          Real tol) {
    X.validate();
    auto sh = shells(X);
    auto monos = all_monomials_up_to(X.dimension, t);
    Real worst = 0;
    for (const auto& a : monos)
        worst = std::max(worst, moment_residual(X, sh, a, total_degree(a)));
    return {worst <= tol, worst};
}

VerifyResult verify_design_moments(const WeightedPointSet& X, int t, Real tol) {
    X.validate();
    auto sh = shells(X);
    auto monos = all_monomials_up_to(X.dimension, t);
    Real worst = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
    for (std::size_t k = 0; k < monos.size(); ++k) {
        Real r = moment_residual(X, sh, monos[k], total_degree(monos[k]));
        worst = std::max(worst, r);
    }
    return {worst <= tol, worst};
}

namespace {

Real harmonic_residual(const WeightedPointSet& X, const MPoly& phi, int l,
                       int t) {
    std::vector<Real> vals(X.size()), norms2(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
        vals[i] = phi.eval(X.points[i]);
        norms2[i] = 0;
        for (Real x : X.points[i]) norms2[i] += x * x;
    }
    Real worst = 0;
    // ||x||^{2j} phi(x) ranges over the harmonic part of Pol_t: l + 2j <= t
    for (int j = 0; l + 2 * j <= t; ++j) {
        Real sum = 0, scale = 0;
        for (std::size_t i = 0; i < X.size(); ++i) {
            Real term = X.weights[i] * std::pow(norms2[i], (Real)j) * vals[i];
            sum += term;
            scale = std::max(scale, std::abs(term));
        }
        worst = std::max(worst, std::abs(sum) / std::max(scale, (Real)1.0L));
    }
    return worst;
}

}  // namespace

VerifyResult verify_design_harmonic_serial(const WeightedPointSet& X, int t,
                                           Real tol) {
    X.validate();
    Real worst = 0;
    for (int l = 1; l <= t; ++l)
        for (const auto& phi : harmonic_basis(X.dimension, l))
            worst = std::max(worst, harmonic_residual(X, phi, l, t));
    return {worst <= tol, worst};
}

VerifyResult verify_design_harmonic(const WeightedPointSet& X, int t, Real tol) {
    X.validate();
    Real worst = 0;
    for (int l = 1; l <= t; ++l) {
        auto basis = harmonic_basis(X.dimension, l);
        Real level = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : level)
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Real r = harmonic_residual(X, basis[i], l, t);
            level = std::max(level, r);
        }
        worst = std::max(worst, level);
    }
    return {worst <= tol, worst};
}

int strength(const WeightedPointSet& X, int t_max, Real tol) {
    int best = 0;
    for (int t = 1; t <= t_max; ++t) {
        if (!verify_design_harmonic(X, t, tol).ok) break;
        best = t;
    }
    return best;
}

DistanceProfile distance_profile(const WeightedPointSet& X, Real tol) {
    if (X.size() < 2) throw std::invalid_argument("need at least two points");
    std::vector<Real> all;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j)
            all.push_back(dist(X.points[i], X.points[j]));
    auto [label, reps] = cluster(all, tol);
    DistanceProfile prof;
    prof.distances = reps;
    prof.per_point_counts.assign(X.size(), std::vector<long>(reps.size(), 0));
    std::size_t k = 0;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j, ++k) {
            prof.per_point_counts[i][label[k]] += 1;
            prof.per_point_counts[j][label[k]] += 1;
        }
    // invariance is per shell: every point of a shell sees the same counts
    prof.is_distance_invariant = true;
    for (const auto& shell : shells(X, tol).shells)
        for (std::size_t i = 1; i < shell.size(); ++i)
            if (prof.per_point_counts[shell[i]] !=
                prof.per_point_counts[shell[0]])
                prof.is_distance_invariant = false;
    return prof;
}

long s_distance_upper_bound(int n, int s) {
    return binomial_l(n - 1 + s, n - 1) + binomial_l(n - 2 + s, n - 1);
}

long spherical_design_lower_bound(int n, int t) {
    int ht = (t + 1) / 2;        // ceil(t/2)
    int ht1 = t / 2;             // ceil((t-1)/2)
    return binomial_l(n - 1 + ht, n - 1) + binomial_l(n - 2 + ht1, n - 1);
}

long dim_pol_e_S(int n, int e, int p, int epsilon_S) {
    if (p <= (e + epsilon_S) / 2) {
        long sum = epsilon_S;
        for (int i = 0; i <= 2 * (p - epsilon_S) - 1; ++i)
            sum += binomial_l(n + e - i - 1, n - 1);
        return sum;
    }
    return binomial_l(n + e, e);
}

bool is_tight(const WeightedPointSet& X, int e, Real tol) {
    auto sh = shells(X);
    if (!verify_design_harmonic(X, 2 * e, tol).ok) return false;
    return static_cast<long>(X.size()) ==
           dim_pol_e_S(X.dimension, e, sh.count(), sh.epsilon_S);
}

WeightedPointSet bajnok_design(Real r1, Real r2, Real second_shell_rotation) {
    if (!(r1 > 0) || !(r2 > 0) || r1 == r2)
        throw std::invalid_argument("radii must be positive and distinct");
    const Real pi = 3.14159265358979323846264338327950288L;
    WeightedPointSet X;
    X.dimension = 2;
    for (int k = 1; k <= 2; ++k) {
        Real r = k == 1 ? r1 : r2;
        Real offset = k == 2 ? second_shell_rotation : 0;
        for (int j = 1; j <= 5; ++j) {
            Real ang = (2.0L * j + k) / 5.0L * pi + offset;
            X.points.push_back({r * std::cos(ang), r * std::sin(ang)});
            X.weights.push_back(1.0L / std::pow(r, (Real)5));
        }
    }
    return X;
}

bool bannai_damerell_feasible(int n) {
    if (n < 3) throw std::invalid_argument("criterion applies for n >= 3");
    long target = n + 3;  // must be an odd square (2m+1)^2
    long root = std::lround(std::sqrt((double)target));
    return root * root == target && root % 2 == 1 && root >= 3;
}

WeightedPointSet rotated(const WeightedPointSet& X, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 2 * 3.141592653589793);
    WeightedPointSet Y = X;
    // compose Givens rotations over all coordinate pairs
    for (int a = 0; a < X.dimension; ++a)
        for (int b = a + 1; b < X.dimension; ++b) {
            Real th = (Real)uni(rng);
            Real c = std::cos(th), s = std::sin(th);
            for (auto& p : Y.points) {
                Real pa = p[a], pb = p[b];
                p[a] = c * pa - s * pb;
                p[b] = s * pa + c * pb;
            }
        }
    return Y;
}

}  // namespace eud
