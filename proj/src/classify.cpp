#include "eud/classify.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eud/design.hpp"

namespace eud {

using nlohmann::json;

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::eliminated_tight4: return "eliminated_tight4";
        case Outcome::eliminated_no_scheme: return "eliminated_no_scheme";
        case Outcome::eliminated_not_qpoly: return "eliminated_not_qpoly";
        case Outcome::eliminated_radius_degenerate:
            return "eliminated_radius_degenerate";
        case Outcome::eliminated_complex_ip: return "eliminated_complex_ip";
        case Outcome::eliminated_no_feasible_match:
            return "eliminated_no_feasible_match";
        case Outcome::match: return "MATCH";
        case Outcome::fixture_gap: return "fixture_gap";
    }
    return "?";
}

OrderFixture parse_order_fixture(const std::string& json_text) {
    json j = json::parse(json_text);
    OrderFixture fx;
    fx.order = j.at("order").get<long>();
    fx.exists = j.value("exists", true);
    fx.citation = j.value("citation", std::string());
    fx.note = j.value("note", std::string());
    for (const auto& entry : j.value("sets", json::array())) {
        FeasibleSet s;
        s.order = fx.order;
        const json& vals = entry.is_object() ? entry.at("values") : entry;
        s.citation = entry.is_object() ? entry.value("citation", fx.citation)
                                       : fx.citation;
        for (const auto& v : vals)
            s.values.push_back(parse_rational(v.get<std::string>()));
        if (s.values.size() != 3)
            throw std::invalid_argument("feasible set needs 3 values");
        fx.sets.push_back(std::move(s));
    }
    return fx;
}

std::optional<OrderFixture> FixtureStore::lookup(int n, long order) const {
    if (root_.empty()) return std::nullopt;
    char name[64];
    std::snprintf(name, sizeof name, "/feasible/n%d/order_%04ld.json", n, order);
    std::ifstream in(root_ + name);
    if (!in) return std::nullopt;
    std::ostringstream text;
    text << in.rdbuf();
    return parse_order_fixture(text.str());
}

std::optional<FeasibleSet> rectangular_feasible_set(long order) {
    if (order % 2 != 0 || order < 6) return std::nullopt;
    long m = order / 2;
    FeasibleSet s;
    s.order = order;
    s.values = {Rational(1, m - 1), Rational(-1, m - 1), Rational(-1)};
    s.citation = "rectangular scheme R(" + std::to_string(m) + ",2)";
    return s;
}

long count_matches(const std::vector<MatchReport>& reports) {
    return std::count_if(reports.begin(), reports.end(), [](const auto& r) {
        return r.outcome == Outcome::match;
    });
}

long count_fixture_gaps(const std::vector<MatchReport>& reports) {
    return std::count_if(reports.begin(), reports.end(), [](const auto& r) {
        return r.outcome == Outcome::fixture_gap;
    });
}

namespace {

bool same_values(const FeasibleSet& a, const FeasibleSet& b) {
    auto va = a.values, vb = b.values;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    return va == vb;
}

void classify_constant(MatchReport& rep) {
    rep.constant_solve = solve_constant(rep.candidate);
    rep.stage = "solve";
    if (rep.constant_solve.radius_degenerate) {
        rep.outcome = Outcome::eliminated_radius_degenerate;
        rep.note = "only R = 1 consistent with both shells";
        return;
    }
    rep.stage = "match";
    bool any_real = false;
    for (const auto& [R, triple] : rep.constant_solve.solutions) {
        if (triple.all_real) any_real = true;
        for (std::size_t si = 0; si < rep.feasible.size(); ++si) {
            if (triple_matches(triple, rep.feasible[si].values, 5e-4L)) {
                rep.outcome = Outcome::match;
                rep.matched_set = static_cast<int>(si);
                return;
            }
        }
    }
    rep.outcome = any_real ? Outcome::eliminated_no_feasible_match
                           : Outcome::eliminated_complex_ip;
}

// n = 2 is the exceptional branch: the weight equations are dependent
// (one-parameter family w1^2 = R^5) and any member is realized by the
// two-pentagon configuration, which verifies as a tight 6-design.
void classify_bajnok_family(MatchReport& rep) {
    rep.nonconstant_solve = solve_nonconstant(rep.candidate, rep.feasible);
    rep.stage = "match";
    if (rep.nonconstant_solve.family &&
        rep.nonconstant_solve.family_relation == "w1^2 = R^5" &&
        is_tight(bajnok_design(1.0L, 2.0L), 3)) {
        rep.outcome = Outcome::match;
        rep.note = "two-pentagon family; witness r2 = 2 verified tight";
    } else {
        rep.outcome = Outcome::eliminated_no_feasible_match;
        rep.note = "expected family relation not recovered";
    }
}

void classify_nonconstant(MatchReport& rep) {
    rep.nonconstant_solve = solve_nonconstant(rep.candidate, rep.feasible);
    rep.stage = "match";
    if (rep.nonconstant_solve.matched_set) {
        rep.outcome = Outcome::match;
        rep.matched_set = rep.nonconstant_solve.matched_set;
        return;
    }
    bool any_solution = false, any_real = false;
    for (const auto& att : rep.nonconstant_solve.attempts)
        for (const auto& s : att.solutions) {
            any_solution = true;
            if (s.real_admissible && s.shell1.all_real) any_real = true;
        }
    if (!any_solution)
        rep.outcome = Outcome::eliminated_radius_degenerate;
    else if (!any_real)
        rep.outcome = Outcome::eliminated_complex_ip;
    else
        rep.outcome = Outcome::eliminated_no_feasible_match;
}

}  // namespace

std::vector<MatchReport> classify(int n, const FixtureStore& fixtures) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("classify supports 2 <= n <= 8");
    CandidateRange range = candidate_range(n);
    std::vector<MatchReport> out;
    for (long N1 = range.L_b; N1 <= range.U_b; ++N1) {
        auto fx = fixtures.lookup(n, N1);
        for (WeightMode mode : {WeightMode::constant, WeightMode::nonconstant}) {
            MatchReport rep;
            rep.candidate = {n, range.N, N1, range.N - N1, mode};

            // (i) X1 at the spherical 4-design bound must be a tight
            // spherical 4-design, which exists only in the admitted
            // dimensions (single-shell argument, n >= 3 only).
            if (n >= 3 && N1 == spherical_design_lower_bound(n, 4) &&
                !bannai_damerell_feasible(n)) {
                rep.stage = "tight4";
                rep.outcome = Outcome::eliminated_tight4;
                out.push_back(std::move(rep));
                continue;
            }

            if (n == 2 && mode == WeightMode::nonconstant) {
                classify_bajnok_family(rep);
                out.push_back(std::move(rep));
                continue;
            }

            // (ii)-(iii) fixture gate
            rep.stage = "scheme";
            if (fx && !fx->exists) {
                rep.outcome = Outcome::eliminated_no_scheme;
                rep.note = fx->note.empty() ? fx->citation : fx->note;
                out.push_back(std::move(rep));
                continue;
            }
            if (fx) rep.feasible = fx->sets;
            if (auto rect = rectangular_feasible_set(N1)) {
                bool dup = false;
                for (const auto& s : rep.feasible)
                    if (same_values(s, *rect)) dup = true;
                if (!dup) rep.feasible.push_back(std::move(*rect));
            }
            // n = 2 constant mode needs no scheme data: the weight
            // equations alone force R = 1.
            if (rep.feasible.empty() && n != 2) {
                if (!fx) {
                    rep.outcome = Outcome::fixture_gap;
                    rep.note = "no feasible-set fixture for this order";
                    out.push_back(std::move(rep));
                    continue;
                }
                rep.stage = "qpoly";
                rep.outcome = Outcome::eliminated_not_qpoly;
                if (fx) rep.note = fx->note.empty() ? fx->citation : fx->note;
                out.push_back(std::move(rep));
                continue;
            }

            if (mode == WeightMode::constant)
                classify_constant(rep);
            else
                classify_nonconstant(rep);
            out.push_back(std::move(rep));
        }
    }
    return out;
}

}  // namespace eud
