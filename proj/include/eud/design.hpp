#pragma once

#include <string>
#include <vector>

#include "eud/rational.hpp"

namespace eud {

/// Finite weighted configuration in R^n. Coordinates and weights are long
/// doubles; all design verification is tolerance based.
struct WeightedPointSet {
    int dimension = 0;
    std::vector<std::vector<Real>> points;
    std::vector<Real> weights;

    std::size_t size() const { return points.size(); }
    /// Enforces positive weights, matching lengths and the duplicate-point
    /// tolerance. Throws std::invalid_argument on violation.
    void validate(Real duplicate_tol = 1e-9L) const;
};

/// Shell decomposition of a configuration onto concentric spheres.
struct ShellDecomposition {
    std::vector<Real> radii;                    // strictly increasing
    std::vector<std::vector<int>> shells;       // point indices per shell
    int epsilon_S = 0;                          // 1 iff some radius is 0
    std::vector<Real> shell_weights;            // w(X_i)

    int count() const { return static_cast<int>(radii.size()); }
};

struct DistanceProfile {
    std::vector<Real> distances;                     // sorted cluster values
    std::vector<std::vector<long>> per_point_counts; // [point][distance]
    bool is_distance_invariant = false;
};

struct VerifyResult {
    bool ok = false;
    Real max_residual = 0;
};

/// Tolerance-clustered shell decomposition (transitive-closure merging).
ShellDecomposition shells(const WeightedPointSet& X, Real tol = 1e-9L);

/// Moment-route verification: compares weighted point sums of every
/// monomial of degree <= t against shell-averaged sphere integrals.
VerifyResult verify_design_moments(const WeightedPointSet& X, int t,
                                   Real tol = 1e-10L);
VerifyResult verify_design_moments_serial(const WeightedPointSet& X, int t,
                                          Real tol = 1e-10L);

/// Harmonic-route verification: weighted sums of ||u||^{2j} phi(u) over an
/// exact harmonic basis, 1 <= l <= t, 0 <= j <= floor((t-l)/2).
VerifyResult verify_design_harmonic(const WeightedPointSet& X, int t,
                                    Real tol = 1e-10L);
VerifyResult verify_design_harmonic_serial(const WeightedPointSet& X, int t,
                                           Real tol = 1e-10L);

/// Largest t <= t_max passing the harmonic route; 0 if none.
int strength(const WeightedPointSet& X, int t_max, Real tol = 1e-10L);

DistanceProfile distance_profile(const WeightedPointSet& X, Real tol = 1e-9L);

/// Eq-style bounds and dimension counts.
long s_distance_upper_bound(int n, int s);
long spherical_design_lower_bound(int n, int t);
long dim_pol_e_S(int n, int e, int p, int epsilon_S);

/// Tightness: 2e-design and |X| matching dim Pol_e(S).
bool is_tight(const WeightedPointSet& X, int e, Real tol = 1e-10L);

/// Two aligned regular pentagons at radii r1 != r2 with weights 1/r_k^5.
/// `second_shell_rotation` offsets the outer pentagon (0 = stated design).
WeightedPointSet bajnok_design(Real r1, Real r2,
                               Real second_shell_rotation = 0.0L);

/// Tight spherical 4-design existence criterion: n = (2m+1)^2 - 3.
bool bannai_damerell_feasible(int n);

/// Applies one common rotation (Givens composition seeded deterministically)
/// to every point; used by the invariance tests.
WeightedPointSet rotated(const WeightedPointSet& X, unsigned seed);

}  // namespace eud
