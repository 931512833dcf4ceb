#include "eud/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eud {

void CharacterTable::validate() const {
    int d = classes();
    if (d < 1 || order < 2) throw std::invalid_argument("invalid character table");
    Rational sum = 0;
    for (int j = 0; j <= d; ++j) {
        if (static_cast<int>(P[j].size()) != d + 1)
            throw std::invalid_argument("invalid character table");
        if (P[j][0] != 1) throw std::invalid_argument("invalid character table");
    }
    for (int i = 0; i <= d; ++i) {
        if (P[0][i] <= 0) throw std::invalid_argument("invalid character table");
        sum += P[0][i];
    }
    if (sum != order) throw std::invalid_argument("invalid character table");
}

std::vector<Rational> multiplicities(const CharacterTable& T) {
    T.validate();
    int d = T.classes();
    std::vector<Rational> m(d + 1);
    Rational total = 0;
    for (int j = 0; j <= d; ++j) {
        Rational denom = 0;
        for (int i = 0; i <= d; ++i)
            denom += T.P[j][i] * T.P[j][i] / T.valency(i);
        if (denom <= 0) throw std::invalid_argument("invalid character table");
        m[j] = Rational(T.order) / denom;
        total += m[j];
    }
    if (m[0] != 1 || total != T.order)
        throw std::invalid_argument("invalid character table");
    return m;
}

RMatrix second_eigenmatrix(const CharacterTable& T) {
    T.validate();
    RMatrix Q;
    try {
        Q = inverse(T.P);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("invalid character table");
    }
    for (auto& row : Q)
        for (auto& v : row) v *= T.order;
    return Q;
}

KreinTensor krein(const CharacterTable& T) {
    int d = T.classes();
    RMatrix Q = second_eigenmatrix(T);
    KreinTensor K;
    K.classes = d;
    K.multiplicities = multiplicities(T);
    K.q.assign(std::size_t(d + 1) * (d + 1) * (d + 1), Rational(0));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            for (int k = 0; k <= d; ++k) {
                Rational sum = 0;
                for (int l = 0; l <= d; ++l)
                    sum += T.valency(l) * Q[l][i] * Q[l][j] * Q[l][k];
                K.at(i, j, k) = sum / (K.multiplicities[k] * T.order);
            }
    return K;
}

bool is_q_polynomial_class3(const KreinTensor& K, const Rational& tol) {
    if (K.classes != 3) throw std::invalid_argument("class mismatch");
    return abs(K.at(1, 1, 3)) <= tol && K.at(1, 1, 2) > tol &&
           K.at(1, 2, 3) > tol;
}

CharacterTable permuted_rows(const CharacterTable& T,
                             const std::array<int, 3>& perm) {
    CharacterTable R = T;
    for (int r = 1; r <= 3; ++r) R.P[r] = T.P[perm[r - 1]];
    return R;
}

std::vector<std::array<int, 3>> qpoly_orderings(const CharacterTable& T) {
    if (T.classes() != 3) throw std::invalid_argument("class mismatch");
    std::vector<std::array<int, 3>> hits;
    std::array<int, 3> perm = {1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        if (is_q_polynomial_class3(krein(permuted_rows(T, perm))))
            hits.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return hits;
}

std::vector<FeasibleSet> feasible_inner_product_sets(const CharacterTable& T) {
    if (T.classes() != 3) throw std::invalid_argument("class mismatch");
    T.validate();
    std::vector<FeasibleSet> out;
    for (int row = 1; row <= 3; ++row) {
        FeasibleSet f;
        f.order = T.order;
        f.citation = "derived from table";
        for (int i = 1; i <= 3; ++i) f.values.push_back(T.P[row][i] / T.valency(i));
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

// Integer SRG restricted eigenvalues r > s from (v,k,lambda,mu).
std::pair<long, long> srg_eigenvalues(const SrgParams& g) {
    long disc = (g.lambda - g.mu) * (g.lambda - g.mu) + 4 * (g.k - g.mu);
    long root = std::lround(std::sqrt((double)disc));
    if (root * root != disc || (g.lambda - g.mu + root) % 2 != 0)
        throw std::invalid_argument("invalid SRG parameters");
    long r = (g.lambda - g.mu + root) / 2;
    long s = (g.lambda - g.mu - root) / 2;
    return {r, s};
}

}  // namespace

CharacterTable degenerate_table(DegenerateKind kind, const SrgParams& srg,
                                long m, long n) {
    CharacterTable T;
    auto R = [](long v) { return Rational(v); };
    switch (kind) {
        case DegenerateKind::disjoint_srg: {
            auto [r, s] = srg_eigenvalues(srg);
            long v = srg.v, k = srg.k;
            T.order = n * v;
            T.P = {{R(1), R(k), R(v - 1 - k), R((n - 1) * v)},
                   {R(1), R(k), R(v - 1 - k), R(-v)},
                   {R(1), R(r), R(-1 - r), R(0)},
                   {R(1), R(s), R(-1 - s), R(0)}};
            break;
        }
        case DegenerateKind::srg_tensor_j: {
            auto [r, s] = srg_eigenvalues(srg);
            long v = srg.v, k = srg.k;
            T.order = n * v;
            T.P = {{R(1), R(n * k), R(n - 1), R(n * (v - 1 - k))},
                   {R(1), R(n * r), R(n - 1), R(n * (-1 - r))},
                   {R(1), R(0), R(-1), R(0)},
                   {R(1), R(n * s), R(n - 1), R(n * (-1 - s))}};
            break;
        }
        case DegenerateKind::rectangular: {
            if (m < 2 || n < 2)
                throw std::invalid_argument("rectangular scheme needs m, n >= 2");
            T.order = m * n;
            T.P = {{R(1), R((m - 1) * (n - 1)), R(n - 1), R(m - 1)},
                   {R(1), R(1), R(-1), R(-1)},
                   {R(1), R(1 - m), R(-1), R(m - 1)},
                   {R(1), R(1 - n), R(n - 1), R(-1)}};
            break;
        }
    }
    T.validate();
    return T;
}

using nlohmann::json;

CharacterTable parse_character_table(const std::string& text) {
    json j = json::parse(text);
    CharacterTable T;
    T.order = j.at("order").get<long>();
    for (const auto& row : j.at("P")) {
        std::vector<Rational> r;
        for (const auto& v : row)
            r.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                      : Rational(v.get<long>()));
        T.P.push_back(std::move(r));
    }
    if (j.contains("classes") && j.at("classes").get<int>() != T.classes())
        throw std::invalid_argument("invalid character table");
    T.validate();
    return T;
}

CharacterTable read_character_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_character_table(ss.str());
}

}  // namespace eud
