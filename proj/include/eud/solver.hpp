#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eud/master_equations.hpp"
#include "eud/rational.hpp"
#include "eud/scheme.hpp"

namespace eud {

/// Three admissible normalized inner products (roots of the degree-3
/// annihilator), sorted by (real, imaginary).
struct InnerProductTriple {
    std::array<Complex, 3> values{};
    bool all_real = false;
};

/// One consistent point of the master-equation system.
struct SystemSolution {
    Complex R{}, w1{};
    InnerProductTriple shell1;  // triple on the N1 shell
    bool real_admissible = false;
};

struct ConstantSolve {
    std::vector<std::pair<Real, InnerProductTriple>> solutions;  // R > 0, != 1
    bool radius_degenerate = false;  // only R = 1 survived
};

/// Which weight-equation instance pairs with the imposed inner product in
/// the match-driven mode.
enum class MatchPartner { shell1_equation, shell2_equation };

struct MatchAttempt {
    Rational imposed_value;  // alpha_1 = f
    int set_index = -1;      // feasible set the value came from
    std::vector<SystemSolution> solutions;
    bool matched = false;
    int matched_solution = -1;
};

struct NonconstantSolve {
    // Mode A: both weight-equation instances imposed simultaneously.
    std::vector<SystemSolution> simultaneous;
    // Positive-dimensional solution set (identically zero eliminant).
    bool family = false;
    std::string family_relation;
    std::vector<std::pair<Real, Real>> family_samples;  // (R, w1) witnesses
    // Mode B: the match-driven route, one attempt per feasible value.
    std::vector<MatchAttempt> attempts;
    std::optional<int> matched_set;  // index into the feasible list
};

/// Constant weight: clears both instances of the weight equation to
/// univariate polynomials in R and intersects their admissible real roots.
ConstantSolve solve_constant(const CandidateParams& cand, Real tol = 1e-8L);

/// Non-constant weight: simultaneous elimination plus the match-driven
/// route against the supplied feasible sets.
NonconstantSolve solve_nonconstant(
    const CandidateParams& cand, const std::vector<FeasibleSet>& feasible,
    MatchPartner partner = MatchPartner::shell2_equation,
    Real match_tol = 5e-4L);

/// Order-insensitive triple comparison against three rational values;
/// complex entries must have imaginary part within tol to match.
bool triple_matches(const InnerProductTriple& t,
                    const std::vector<Rational>& set, Real tol);

}  // namespace eud
