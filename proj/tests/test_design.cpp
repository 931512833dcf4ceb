#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eud/design.hpp"
#include "eud/design_io.hpp"
#include "eud/gegenbauer.hpp"
#include "eud/harmonic.hpp"
#include "eud/linalg.hpp"
#include "eud/moments.hpp"

using namespace eud;

namespace {

const Real kPi = 3.141592653589793238462643383279503L;

WeightedPointSet pentagon(Real r = 1.0L, Real offset = 0.0L) {
    WeightedPointSet X;
    X.dimension = 2;
    for (int j = 0; j < 5; ++j) {
        Real th = 2 * kPi * j / 5 + offset;
        X.points.push_back({r * std::cos(th), r * std::sin(th)});
        X.weights.push_back(1.0L);
    }
    return X;
}

WeightedPointSet ngon(int k) {
    WeightedPointSet X;
    X.dimension = 2;
    for (int j = 0; j < k; ++j) {
        Real th = 2 * kPi * j / k;
        X.points.push_back({std::cos(th), std::sin(th)});
        X.weights.push_back(1.0L);
    }
    return X;
}

// Gauss-Legendre nodes/weights on [-1, 1] (Newton on P_N).
void gauss_legendre(int N, std::vector<Real>& x, std::vector<Real>& w) {
    x.resize(N);
    w.resize(N);
    for (int i = 0; i < N; ++i) {
        Real t = std::cos(kPi * (i + 0.75L) / (N + 0.5L));
        for (int it = 0; it < 100; ++it) {
            Real p0 = 1, p1 = t;
            for (int k = 2; k <= N; ++k) {
                Real p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            Real dp = N * (t * p1 - p0) / (t * t - 1);
            Real step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-19L) break;
        }
        x[i] = t;
        Real p0 = 1, p1 = t;
        for (int k = 2; k <= N; ++k) {
            Real p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        Real dp = N * (t * p1 - p0) / (t * t - 1);
        w[i] = 2 / ((1 - t * t) * dp * dp);
    }
}

// Quadrature oracle for the sphere average of x^alpha, n = 2, 3, 4.
// Exact by construction for polynomial integrands: trapezoid on the circle,
// Gauss-Legendre in cos(theta), Gauss-Chebyshev (2nd kind) for the S^3
// polar angle whose measure carries sqrt(1 - u^2).
Real quadrature_moment(const MultiIndex& alpha, int n) {
    const int M = 48;
    if (n == 2) {
        Real s = 0;
        for (int i = 0; i < M; ++i) {
            Real th = 2 * kPi * i / M;
            s += std::pow(std::cos(th), (Real)alpha[0]) *
                 std::pow(std::sin(th), (Real)alpha[1]);
        }
        return s / M;
    }
    if (n == 3) {
        std::vector<Real> gx, gw;
        gauss_legendre(12, gx, gw);
        Real num = 0, den = 0;
        for (int i = 0; i < 12; ++i) {
            Real u = gx[i];  // cos(theta)
            Real s2 = 1 - u * u;
            MultiIndex sub = {alpha[0], alpha[1]};
            Real inner = quadrature_moment(sub, 2);
            num += gw[i] * std::pow(u, (Real)alpha[2]) *
                   std::pow(s2, (alpha[0] + alpha[1]) / 2.0L) * inner;
            den += gw[i];
        }
        return num / den;
    }
    REQUIRE(n == 4);
    // u = cos(psi), measure (1 - u^2)^{1/2} du
    const int N = 12;
    Real num = 0, den = 0;
    for (int k = 1; k <= N; ++k) {
        Real th = kPi * k / (N + 1);
        Real u = std::cos(th), cw = std::sin(th) * std::sin(th);
        MultiIndex sub = {alpha[0], alpha[1], alpha[2]};
        Real inner = quadrature_moment(sub, 3);
        num += cw * std::pow(u, (Real)alpha[3]) *
               std::pow(1 - u * u, (alpha[0] + alpha[1] + alpha[2]) / 2.0L) *
               inner;
        den += cw;
    }
    return num / den;
}

}  // namespace

TEST_CASE("sphere_moment basics") {
    CHECK(sphere_moment({1, 1}, 2) == Rational(0));
    CHECK(sphere_moment({2, 0}, 2) == Rational(1, 2));
    CHECK(sphere_moment({2, 2}, 2) == Rational(1, 8));
    CHECK(sphere_moment({4, 0, 0}, 3) == Rational(1, 5));
    CHECK_THROWS(sphere_moment({2, 0}, 3));
}

TEST_CASE("sphere_moment agrees with quadrature, |alpha| <= 8, n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (int deg = 0; deg <= 8; deg += 2)
            for (const auto& alpha : monomials_of_degree(n, deg)) {
                bool odd = false;
                for (int a : alpha) odd = odd || (a % 2 != 0);
                Real closed = to_real(sphere_moment(alpha, n));
                Real quad = odd ? 0.0L : quadrature_moment(alpha, n);
                if (odd) CHECK(sphere_moment(alpha, n) == Rational(0));
                CHECK(std::abs(closed - quad) < 1e-10L);
            }
}

TEST_CASE("sphere_moment trace recursion sum_i m(alpha + 2e_i) = m(alpha)") {
    for (int n = 2; n <= 5; ++n)
        for (int deg = 0; deg <= 6; deg += 2)
            for (const auto& alpha : monomials_of_degree(n, deg)) {
                Rational total = 0;
                for (int i = 0; i < n; ++i) {
                    MultiIndex b = alpha;
                    b[i] += 2;
                    total += sphere_moment(b, n);
                }
                CHECK(total == sphere_moment(alpha, n));
            }
}

TEST_CASE("shell decomposition") {
    WeightedPointSet X = bajnok_design(1.0L, 2.0L);
    auto S = shells(X);
    CHECK(S.count() == 2);
    CHECK(S.epsilon_S == 0);
    CHECK(S.shells[0].size() == 5);
    CHECK(S.shells[1].size() == 5);
    CHECK(std::abs(S.radii[0] - 1) < 1e-12L);
    CHECK(std::abs(S.radii[1] - 2) < 1e-12L);

    WeightedPointSet O;
    O.dimension = 3;
    O.points = {{0.0L, 0.0L, 0.0L}};
    O.weights = {1.0L};
    auto SO = shells(O);
    CHECK(SO.count() == 1);
    CHECK(SO.epsilon_S == 1);
}

TEST_CASE("pentagon is a spherical 4-design but not 5") {
    WeightedPointSet P = pentagon();
    CHECK(verify_design_moments(P, 4).ok);
    CHECK(verify_design_harmonic(P, 4).ok);
    CHECK_FALSE(verify_design_moments(P, 5).ok);
    CHECK(strength(P, 10) == 4);
    CHECK(strength(ngon(6), 10) == 5);
}

TEST_CASE("bajnok design verifies at 6 by both routes, strength exactly 6") {
    WeightedPointSet X = bajnok_design(1.0L, 2.0L);
    auto m = verify_design_moments(X, 6);
    auto h = verify_design_harmonic(X, 6);
    CHECK(m.ok);
    CHECK(h.ok);
    CHECK(m.max_residual < 1e-10L);
    CHECK(h.max_residual < 1e-10L);
    CHECK_FALSE(verify_design_harmonic(X, 7).ok);
    CHECK(strength(X, 10) == 6);
    CHECK(is_tight(X, 3));
    CHECK(dim_pol_e_S(2, 3, 2, 0) == 10);

    CHECK(is_tight(bajnok_design(1.0L, 3.0L), 3));
    CHECK_FALSE(is_tight(pentagon(), 3));
}

TEST_CASE("bajnok parameter validation") {
    CHECK_THROWS(bajnok_design(1.0L, 1.0L));
    CHECK_THROWS(bajnok_design(0.0L, 2.0L));
}

TEST_CASE("rotation sweep: only pentagon-group images of the stated "
          "alignment verify") {
    // The outer pentagon sits at an odd multiple of pi/5 relative to the
    // inner one; offsets equivalent under the 2pi/5 rotation group keep the
    // design, everything else breaks it.
    for (int k = 0; k <= 20; ++k) {
        Real th = kPi * k / 10;  // grid step pi/10
        WeightedPointSet X = bajnok_design(1.0L, 2.0L, th);
        bool aligned = (k % 4 == 0);  // multiples of 2pi/5
        CHECK(verify_design_harmonic(X, 6).ok == aligned);
    }
}

TEST_CASE("orthogonal and scaling invariance") {
    WeightedPointSet X = bajnok_design(1.0L, 2.0L);
    for (unsigned seed : {1u, 7u, 42u}) {
        WeightedPointSet Y = rotated(X, seed);
        CHECK(verify_design_harmonic(Y, 6).ok);
        CHECK(is_tight(Y, 3));
    }
    WeightedPointSet Z = X;
    for (auto& p : Z.points)
        for (auto& c : p) c *= 3.5L;
    CHECK(verify_design_harmonic(Z, 6).ok);
    WeightedPointSet W = X;
    for (auto& w : W.weights) w *= 0.37L;
    CHECK(verify_design_harmonic(W, 6).ok);
}

TEST_CASE("shell-level facts on the verified tight design") {
    WeightedPointSet X = bajnok_design(1.0L, 2.0L);
    auto S = shells(X);
    for (int i = 0; i < S.count(); ++i) {
        WeightedPointSet shell;
        shell.dimension = 2;
        for (int idx : S.shells[i]) {
            std::vector<Real> p = X.points[idx];
            for (auto& c : p) c /= S.radii[i];  // rescale to the unit circle
            shell.points.push_back(p);
            shell.weights.push_back(1.0L);
        }
        auto prof = distance_profile(shell);
        CHECK(prof.distances.size() == 2);  // e-distance bound, e = 3
        CHECK(prof.is_distance_invariant);
        CHECK(verify_design_harmonic(shell, 4).ok);  // 2e-2p+2eps+2 = 4
    }
    CHECK(distance_profile(X).is_distance_invariant);
}

TEST_CASE("distance profile flags a perturbed vertex") {
    WeightedPointSet P = pentagon();
    P.points[0][0] += 0.05L;
    auto prof = distance_profile(P);
    CHECK_FALSE(prof.is_distance_invariant);
}

TEST_CASE("bounds and dimension formulas") {
    CHECK(s_distance_upper_bound(2, 2) == 5);
    CHECK(s_distance_upper_bound(3, 2) == 9);
    CHECK(s_distance_upper_bound(7, 3) == 112);
    CHECK(spherical_design_lower_bound(7, 4) == 35);
    CHECK(spherical_design_lower_bound(2, 4) == 5);
    CHECK(spherical_design_lower_bound(6, 4) == 27);
    CHECK(dim_pol_e_S(7, 3, 2, 0) == 120);
    CHECK(dim_pol_e_S(2, 3, 2, 0) == 10);
    CHECK(dim_pol_e_S(3, 3, 1, 0) == 16);
    for (int n = 2; n <= 8; ++n)
        CHECK(dim_pol_e_S(n, 3, 2, 0) == binomial_l(n + 3, 3));
}

TEST_CASE("bannai-damerell feasibility") {
    for (int n : {3, 4, 5, 7, 8}) CHECK_FALSE(bannai_damerell_feasible(n));
    CHECK(bannai_damerell_feasible(6));
    CHECK(bannai_damerell_feasible(22));
    CHECK_THROWS(bannai_damerell_feasible(2));
}

TEST_CASE("route equivalence on 200 random configurations") {
    std::mt19937 rng(2024);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.1, 2.0);
    std::uniform_int_distribution<int> dim(2, 4), count(3, 12), deg(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        WeightedPointSet X;
        X.dimension = dim(rng);
        int m = count(rng);
        for (int i = 0; i < m; ++i) {
            std::vector<Real> p(X.dimension);
            for (auto& c : p) c = gauss(rng);
            X.points.push_back(p);
            X.weights.push_back(unif(rng));
        }
        int t = deg(rng);
        CHECK(verify_design_moments(X, t, 1e-9L).ok ==
              verify_design_harmonic(X, t, 1e-9L).ok);
    }
    // positive cases: rotated copies of genuine designs
    for (unsigned seed = 1; seed <= 10; ++seed) {
        WeightedPointSet Y = rotated(bajnok_design(1.0L, 2.0L), seed);
        CHECK(verify_design_moments(Y, 6).ok);
        CHECK(verify_design_harmonic(Y, 6).ok);
    }
}

TEST_CASE("weighted-centroid configurations are 1-designs") {
    std::mt19937 rng(5);
    std::normal_distribution<double> gauss;
    WeightedPointSet X;
    X.dimension = 3;
    for (int i = 0; i < 6; ++i) {
        std::vector<Real> p = {gauss(rng), gauss(rng), gauss(rng)};
        X.points.push_back(p);
        X.weights.push_back(1.0L);
    }
    // translate so the centroid vanishes
    for (int c = 0; c < 3; ++c) {
        Real mean = 0;
        for (const auto& p : X.points) mean += p[c];
        mean /= X.points.size();
        for (auto& p : X.points) p[c] -= mean;
    }
    CHECK(verify_design_harmonic(X, 1, 1e-9L).ok);
}

TEST_CASE("design file round trip") {
    WeightedPointSet X = bajnok_design(1.0L, 2.0L);
    std::string text = design_to_json(X);
    WeightedPointSet Y = parse_design(text);
    REQUIRE(Y.size() == X.size());
    CHECK(Y.dimension == X.dimension);
    for (std::size_t i = 0; i < X.size(); ++i) {
        CHECK(std::abs(X.weights[i] - Y.weights[i]) < 1e-18L);
        for (int c = 0; c < 2; ++c)
            CHECK(std::abs(X.points[i][c] - Y.points[i][c]) < 1e-18L);
    }
    CHECK_THROWS(parse_design("{\"dimension\": 2, \"points\": ["));
}

TEST_CASE("validate rejects bad configurations") {
    WeightedPointSet X;
    X.dimension = 2;
    X.points = {{1.0L, 0.0L}, {1.0L, 0.0L}};
    X.weights = {1.0L, 1.0L};
    CHECK_THROWS(X.validate());  // duplicate points
    X.points[1][0] = -1.0L;
    X.weights[1] = -1.0L;
    CHECK_THROWS(X.validate());  // negative weight
    X.weights[1] = 1.0L;
    CHECK_NOTHROW(X.validate());
}
