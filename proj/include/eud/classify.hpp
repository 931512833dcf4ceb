#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eud/solver.hpp"

namespace eud {

enum class Outcome {
    eliminated_tight4,
    eliminated_no_scheme,
    eliminated_not_qpoly,
    eliminated_radius_degenerate,
    eliminated_complex_ip,
    eliminated_no_feasible_match,
    match,
    fixture_gap,
};

std::string outcome_name(Outcome o);

/// Per-order fixture record transcribed from the published feasible-set
/// tables: whether a 3-class scheme of that order exists and which
/// Q-polynomial feasible 3-inner-product sets it offers.
struct OrderFixture {
    long order = 0;
    bool exists = true;
    std::vector<FeasibleSet> sets;
    std::string citation;
    std::string note;
};

/// Read-only store over a fixture directory. Feasible-set files live at
/// <root>/feasible/n<dim>/order_<NNNN>.json with the schema
/// { "order": N1, "exists": bool, "citation": "...", "sets": [...] };
/// each set is either an array of three rational strings or an object
/// { "values": [...], "citation": "..." }.
class FixtureStore {
public:
    explicit FixtureStore(std::string root) : root_(std::move(root)) {}

    const std::string& root() const { return root_; }
    std::optional<OrderFixture> lookup(int n, long order) const;

private:
    std::string root_;
};

OrderFixture parse_order_fixture(const std::string& json_text);

/// One classification row: a candidate, where the pipeline stopped, and the
/// numeric evidence gathered along the way.
struct MatchReport {
    CandidateParams candidate;
    Outcome outcome = Outcome::fixture_gap;
    std::string stage;  // tight4 | scheme | qpoly | solve | match
    std::vector<FeasibleSet> feasible;
    ConstantSolve constant_solve;
    NonconstantSolve nonconstant_solve;
    std::optional<int> matched_set;  // index into feasible
    std::string note;
};

/// The feasible set of the rectangular scheme R(m, 2) on an even number of
/// points 2m: {1/(m-1), -1/(m-1), -1}. Available for every even order
/// without a fixture because the family is parametric.
std::optional<FeasibleSet> rectangular_feasible_set(long order);

/// Full two-shell search for dimension n: every N1 in [L_b, U_b], both
/// weight modes. Deterministic given (n, fixtures).
std::vector<MatchReport> classify(int n, const FixtureStore& fixtures);

long count_matches(const std::vector<MatchReport>& reports);
long count_fixture_gaps(const std::vector<MatchReport>& reports);

}  // namespace eud
