#include "eud/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace eud {

using nlohmann::json;

namespace {

std::string format_real(Real v, int decimals) {
    char buf[64];
    if (std::abs(v) < 0.5L * std::pow(10.0L, (Real)-decimals)) v = 0;  // no -0.000
    std::snprintf(buf, sizeof buf, "%.*Lf", decimals, v);
    return buf;
}

std::string format_rational_list(const std::vector<Rational>& vals) {
    std::string s = "{";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) s += ", ";
        s += vals[i].get_str();
    }
    return s + "}";
}

// "R values" column: admissible radii squared, 6 significant digits.
std::string radii_column(const MatchReport& r) {
    std::vector<Real> rs;
    if (r.candidate.mode == WeightMode::constant) {
        for (const auto& [R, t] : r.constant_solve.solutions) rs.push_back(R);
    } else {
        for (const auto& att : r.nonconstant_solve.attempts)
            for (const auto& s : att.solutions)
                if (s.real_admissible) rs.push_back(s.R.real());
    }
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) out += "; ";
        std::snprintf(buf, sizeof buf, "%.6Lg", rs[i]);
        out += buf;
    }
    if (r.candidate.mode == WeightMode::nonconstant &&
        !r.nonconstant_solve.family_relation.empty())
        out = out.empty() ? "family " + r.nonconstant_solve.family_relation
                          : out + "; family " + r.nonconstant_solve.family_relation;
    return out;
}

std::string triples_column(const MatchReport& r) {
    std::string out;
    if (r.candidate.mode == WeightMode::constant) {
        for (const auto& [R, t] : r.constant_solve.solutions) {
            if (!out.empty()) out += "; ";
            out += format_triple(t);
        }
    } else {
        for (const auto& att : r.nonconstant_solve.attempts) {
            for (const auto& s : att.solutions) {
                if (!s.real_admissible) continue;
                if (!out.empty()) out += "; ";
                out += "f=" + att.imposed_value.get_str() + ": " +
                       format_triple(s.shell1);
            }
        }
    }
    return out;
}

std::string matched_column(const MatchReport& r) {
    if (!r.matched_set) return "";
    return format_rational_list(r.feasible[*r.matched_set].values);
}

std::string citation_column(const MatchReport& r) {
    if (r.matched_set) return r.feasible[*r.matched_set].citation;
    return r.note;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const char* mode_name(WeightMode m) {
    return m == WeightMode::constant ? "constant" : "nonconstant";
}

}  // namespace

std::string format_complex(const Complex& z, int decimals) {
    Real tol = 0.5L * std::pow(10.0L, (Real)-decimals);
    if (std::abs(z.imag()) < tol) return format_real(z.real(), decimals);
    std::string s = format_real(z.real(), decimals);
    s += z.imag() < 0 ? " - " : " + ";
    return s + format_real(std::abs(z.imag()), decimals) + "i";
}

std::string format_triple(const InnerProductTriple& t, int decimals) {
    std::string s = "{";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ", ";
        s += format_complex(t.values[i], decimals);
    }
    return s + "}";
}

std::string report_csv(const std::vector<MatchReport>& reports) {
    std::string out =
        "N,N1,weight_mode,outcome,R_values,triples,matched_feasible_set,citation\n";
    for (const auto& r : reports) {
        out += std::to_string(r.candidate.N) + "," +
               std::to_string(r.candidate.N1) + "," + mode_name(r.candidate.mode) +
               "," + outcome_name(r.outcome) + "," + csv_escape(radii_column(r)) +
               "," + csv_escape(triples_column(r)) + "," +
               csv_escape(matched_column(r)) + "," +
               csv_escape(citation_column(r)) + "\n";
    }
    return out;
}

std::string report_markdown(const std::vector<MatchReport>& reports) {
    std::string out =
        "| N | N1 | weight | outcome | R values | triples | matched set | "
        "citation |\n|---|----|--------|---------|----------|---------|"
        "-------------|----------|\n";
    for (const auto& r : reports) {
        out += "| " + std::to_string(r.candidate.N) + " | " +
               std::to_string(r.candidate.N1) + " | " + mode_name(r.candidate.mode) +
               " | " + outcome_name(r.outcome) + " | " + radii_column(r) + " | " +
               triples_column(r) + " | " + matched_column(r) + " | " +
               citation_column(r) + " |\n";
    }
    return out;
}

std::string report_json(const std::vector<MatchReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) {
        json row;
        row["N"] = r.candidate.N;
        row["N1"] = r.candidate.N1;
        row["weight_mode"] = mode_name(r.candidate.mode);
        row["outcome"] = outcome_name(r.outcome);
        row["stage"] = r.stage;
        row["R_values"] = radii_column(r);
        row["triples"] = triples_column(r);
        row["matched_feasible_set"] = matched_column(r);
        row["citation"] = citation_column(r);
        json sets = json::array();
        for (const auto& s : r.feasible) {
            json fs;
            json vals = json::array();
            for (const auto& v : s.values) vals.push_back(v.get_str());
            fs["values"] = vals;
            fs["citation"] = s.citation;
            sets.push_back(fs);
        }
        row["feasible_sets"] = sets;
        if (!r.note.empty()) row["note"] = r.note;
        arr.push_back(row);
    }
    return arr.dump(2) + "\n";
}

std::string render_report(const std::vector<MatchReport>& reports,
                          const std::string& format) {
    if (format == "csv") return report_csv(reports);
    if (format == "markdown") return report_markdown(reports);
    if (format == "json") return report_json(reports);
    throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace eud
