#pragma once

#include <string>
#include <vector>

#include "eud/classify.hpp"

namespace eud {

/// Appendix-style rendering: 3 decimals for inner products, complex entries
/// as a+bi. Deterministic byte-for-byte for a given report list.
std::string format_complex(const Complex& z, int decimals = 3);
std::string format_triple(const InnerProductTriple& t, int decimals = 3);

/// Tables with columns (N, N1, weight_mode, outcome, R values, triples,
/// matched feasible set, citation).
std::string report_csv(const std::vector<MatchReport>& reports);
std::string report_markdown(const std::vector<MatchReport>& reports);
std::string report_json(const std::vector<MatchReport>& reports);

std::string render_report(const std::vector<MatchReport>& reports,
                          const std::string& format);  // csv|markdown|json

}  // namespace eud
