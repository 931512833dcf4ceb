#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eud/classify.hpp"
#include "eud/design.hpp"
#include "eud/design_io.hpp"
#include "eud/report.hpp"
#include "eud/scheme.hpp"

using namespace eud;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitFixtureGap = 3;

int g_precision = 6;

std::string fmt(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lg", g_precision, v);
    return buf;
}

WeightedPointSet load_design(const std::string& path) {
    WeightedPointSet X = read_design(path);
    X.validate();
    return X;
}

void print_shells(const WeightedPointSet& X) {
    auto S = shells(X);
    std::printf("shells: %d (epsilon_S = %d)\n", S.count(), S.epsilon_S);
    for (int i = 0; i < S.count(); ++i)
        std::printf("  r = %s  points = %zu  w(X_i) = %s\n",
                    fmt(S.radii[i]).c_str(), S.shells[i].size(),
                    fmt(S.shell_weights[i]).c_str());
}

int cmd_verify(const std::string& path, int t, Real tol) {
    WeightedPointSet X = load_design(path);
    auto m = verify_design_moments(X, t, tol);
    auto h = verify_design_harmonic(X, t, tol);
    std::printf("moment route:   %s (max residual %s)\n",
                m.ok ? "verified" : "FAILED", fmt(m.max_residual).c_str());
    std::printf("harmonic route: %s (max residual %s)\n",
                h.ok ? "verified" : "FAILED", fmt(h.max_residual).c_str());
    int s = strength(X, t + 2, tol);
    std::printf("strength (up to %d): %d\n", t + 2, s);
    print_shells(X);
    auto prof = distance_profile(X);
    std::printf("distances: %zu%s\n", prof.distances.size(),
                prof.is_distance_invariant ? " (distance invariant)" : "");
    return (m.ok && h.ok) ? kExitOk : kExitNegative;
}

int cmd_strength(const std::string& path, int t_max, Real tol) {
    WeightedPointSet X = load_design(path);
    int s = strength(X, t_max, tol);
    std::printf("strength: %d\n", s);
    return s > 0 ? kExitOk : kExitNegative;
}

int cmd_construct(Real r1, Real r2, Real rotation, const std::string& out) {
    if (r1 <= 0 || r2 <= 0 || std::abs(r1 - r2) < 1e-12L)
        throw std::invalid_argument("radii must be positive and distinct");
    WeightedPointSet X = bajnok_design(r1, r2, rotation);
    write_design(X, out);
    WeightedPointSet back = read_design(out);  // round-trip check
    back.validate();
    std::printf("wrote %s (%zu points, dimension %d)\n", out.c_str(), X.size(),
                X.dimension);
    return kExitOk;
}

int cmd_moments(const std::string& path, int t, Real tol) {
    WeightedPointSet X = load_design(path);
    bool ok = true;
    for (int d = 0; d <= t; ++d) {
        auto r = verify_design_moments(X, d, tol);
        std::printf("degree <= %d: max residual %s%s\n", d,
                    fmt(r.max_residual).c_str(), r.ok ? "" : "  <-- exceeds tol");
        ok = ok && r.ok;
    }
    return ok ? kExitOk : kExitNegative;
}

void print_feasible(const std::vector<FeasibleSet>& sets) {
    for (const auto& s : sets) {
        std::printf("  {");
        for (std::size_t i = 0; i < s.values.size(); ++i)
            std::printf("%s%s", i ? ", " : "", s.values[i].get_str().c_str());
        std::printf("}\n");
    }
}

int cmd_krein(const std::string& path) {
    CharacterTable T = read_character_table(path);
    T.validate();
    auto m = multiplicities(T);
    std::printf("order %ld, classes %d\nmultiplicities:", T.order, T.classes());
    for (const auto& v : m) std::printf(" %s", v.get_str().c_str());
    std::printf("\n");
    KreinTensor K = krein(T);
    int d = K.classes;
    for (int k = 0; k <= d; ++k) {
        std::printf("q_{ij}^%d:\n", k);
        for (int i = 0; i <= d; ++i) {
            std::printf(" ");
            for (int j = 0; j <= d; ++j)
                std::printf(" %s", K.at(i, j, k).get_str().c_str());
            std::printf("\n");
        }
    }
    if (d != 3) {
        std::printf("Q-polynomial class-3 check: class mismatch (d = %d)\n", d);
        return kExitOk;
    }
    auto orderings = qpoly_orderings(T);
    std::printf("Q-polynomial orderings (rows 1..3): %zu\n", orderings.size());
    for (const auto& p : orderings)
        std::printf("  (%d %d %d)\n", p[0], p[1], p[2]);
    std::printf("feasible 3-inner-product sets:\n");
    print_feasible(feasible_inner_product_sets(T));
    return kExitOk;
}

int cmd_qpoly(const std::string& path) {
    CharacterTable T = read_character_table(path);
    T.validate();
    auto orderings = qpoly_orderings(T);
    if (orderings.empty()) {
        std::printf("not Q-polynomial under any ordering\n");
        return kExitNegative;
    }
    for (const auto& p : orderings)
        std::printf("Q-polynomial ordering: (%d %d %d)\n", p[0], p[1], p[2]);
    return kExitOk;
}

int cmd_feasible(const std::string& path) {
    CharacterTable T = read_character_table(path);
    T.validate();
    print_feasible(feasible_inner_product_sets(T));
    return kExitOk;
}

int run_classify(int n, const std::string& fixtures_dir, const std::string& out,
                 const std::string& format, bool quiet) {
    FixtureStore store(fixtures_dir);
    auto reports = classify(n, store);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::invalid_argument("cannot write " + out);
        f << render_report(reports, format);
        std::printf("wrote %s\n", out.c_str());
    }
    if (!quiet) std::fputs(report_markdown(reports).c_str(), stdout);
    long gaps = count_fixture_gaps(reports);
    if (gaps > 0) {
        std::printf("fixture gaps: %ld\n", gaps);
        for (const auto& r : reports)
            if (r.outcome == Outcome::fixture_gap)
                std::printf("  missing fixture: n=%d order=%ld\n", n,
                            r.candidate.N1);
    }
    std::printf("matches: %ld\n", count_matches(reports));
    return gaps > 0 ? kExitFixtureGap : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euclidean t-design verification and two-shell classification"};
    app.require_subcommand(1);
    app.fallthrough();

    Real tol = 1e-10L;
    std::string fixtures_dir = "fixtures";
    std::string output, format = "csv";
    app.add_option("--tol", tol, "verification tolerance")->check(CLI::PositiveNumber);
    app.add_option("--precision", g_precision, "printed significant digits");
    app.add_option("--fixtures", fixtures_dir, "fixture directory");
    app.add_option("--output", output, "output file path");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));

    std::string design_path, table_path;
    int t = 6, t_max = 10, n = 7;
    Real r1 = 1, r2 = 2, rotation = 0;

    auto* verify = app.add_subcommand("verify", "verify a design file");
    verify->add_option("design", design_path)->required();
    verify->add_option("--t", t, "target strength");

    auto* sstr = app.add_subcommand("strength", "maximum verified strength");
    sstr->add_option("design", design_path)->required();
    sstr->add_option("--max-t", t_max);

    auto* cons = app.add_subcommand("construct-bajnok",
                                    "write the two-pentagon design");
    cons->add_option("r1", r1)->required();
    cons->add_option("r2", r2)->required();
    cons->add_option("--rotation", rotation, "offset of the outer pentagon");

    auto* mom = app.add_subcommand("moments", "per-degree moment residuals");
    mom->add_option("design", design_path)->required();
    mom->add_option("--t", t);

    auto* kr = app.add_subcommand("krein", "Krein tensor and Q-polynomial check");
    kr->add_option("table", table_path)->required();

    auto* qp = app.add_subcommand("qpoly", "Q-polynomial orderings");
    qp->add_option("table", table_path)->required();

    auto* fip = app.add_subcommand("feasible-ips", "feasible inner-product sets");
    fip->add_option("table", table_path)->required();

    auto* cls = app.add_subcommand("classify", "two-shell tight 6-design search");
    cls->add_option("n", n)->required();

    auto* rep = app.add_subcommand("report", "classification report file only");
    rep->add_option("n", n)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(design_path, t, tol);
        if (sstr->parsed()) return cmd_strength(design_path, t_max, tol);
        if (cons->parsed())
            return cmd_construct(r1, r2, rotation,
                                 output.empty() ? "bajnok.json" : output);
        if (mom->parsed()) return cmd_moments(design_path, t, tol);
        if (kr->parsed()) return cmd_krein(table_path);
        if (qp->parsed()) return cmd_qpoly(table_path);
        if (fip->parsed()) return cmd_feasible(table_path);
        if (cls->parsed()) return run_classify(n, fixtures_dir, output, format, false);
        if (rep->parsed()) {
            if (output.empty())
                throw std::invalid_argument("report requires --output");
            return run_classify(n, fixtures_dir, output, format, true);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
    return kExitInput;
}
