#pragma once

#include <array>
#include <string>
#include <vector>

#include "eud/linalg.hpp"
#include "eud/rational.hpp"

namespace eud {

/// First eigenmatrix P of a symmetric association scheme;
/// entry P[j][i] = p_i(j). Row 0 carries the valencies k_i.
struct CharacterTable {
    long order = 0;
    RMatrix P;

    int classes() const { return static_cast<int>(P.size()) - 1; }
    Rational valency(int i) const { return P[0][i]; }
    /// Checks P[j][0] = 1, positive integral valencies summing to the order.
    void validate() const;
};

/// Krein structure constants q_{ij}^k with the attached multiplicities.
struct KreinTensor {
    int classes = 0;
    std::vector<Rational> q;  // (d+1)^3, index (i*(d+1)+j)*(d+1)+k
    std::vector<Rational> multiplicities;

    const Rational& at(int i, int j, int k) const {
        return q[(std::size_t(i) * (classes + 1) + j) * (classes + 1) + k];
    }
    Rational& at(int i, int j, int k) {
        return q[(std::size_t(i) * (classes + 1) + j) * (classes + 1) + k];
    }
};

/// Feasible 3-inner-product set of a class-3 table row (or a transcription).
struct FeasibleSet {
    std::vector<Rational> values;  // exactly 3 entries in [-1, 1]
    std::string citation;
    long order = 0;
};

/// Column-orthogonality multiplicities m_j = |X| / sum_i p_i(j)^2 / k_i.
std::vector<Rational> multiplicities(const CharacterTable& T);

/// Q = |X| P^{-1}; satisfies q_j(i)/m_j = p_i(j)/k_j entrywise.
RMatrix second_eigenmatrix(const CharacterTable& T);

/// Krein parameters from the eigenmatrices (exact rationals).
KreinTensor krein(const CharacterTable& T);

/// Class-3 Q-polynomial test: q_11^3 = 0, q_11^2 > 0, q_12^3 > 0.
bool is_q_polynomial_class3(const KreinTensor& K, const Rational& tol = 0);

/// Permutations of rows 1..3 whose reordered table passes the class-3 test.
std::vector<std::array<int, 3>> qpoly_orderings(const CharacterTable& T);

CharacterTable permuted_rows(const CharacterTable& T,
                             const std::array<int, 3>& perm);

/// {p_1(row)/k_1, p_2(row)/k_2, p_3(row)/k_3} for rows 1..3.
std::vector<FeasibleSet> feasible_inner_product_sets(const CharacterTable& T);

enum class DegenerateKind { disjoint_srg, srg_tensor_j, rectangular };

struct SrgParams {
    long v = 0, k = 0, lambda = 0, mu = 0;
};

/// The printed class-3 character tables of the three degenerate families:
/// disjoint unions of an SRG, SRG (x) J_n, and the rectangular scheme R(m,n).
CharacterTable degenerate_table(DegenerateKind kind, const SrgParams& srg,
                                long m, long n);

/// Character-table file (JSON): { "order": N, "classes": 3, "P": [["1",...]] }
CharacterTable read_character_table(const std::string& path);
CharacterTable parse_character_table(const std::string& json_text);

}  // namespace eud
