#include <chrono>
#include <cstdio>
#include <random>

#include "eud/design.hpp"
#include "eud/master_equations.hpp"
#include "eud/resultant.hpp"
#include "eud/solver.hpp"

using namespace eud;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

WeightedPointSet random_config(int n, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.5, 2.0);
    WeightedPointSet X;
    X.dimension = n;
    for (int i = 0; i < count; ++i) {
        std::vector<Real> p(n);
        for (auto& c : p) c = gauss(rng);
        X.points.push_back(p);
        X.weights.push_back(unif(rng));
    }
    return X;
}

template <class F>
double timed(const char* name, F&& f) {
    auto t0 = Clock::now();
    f();
    double ms = ms_since(t0);
    std::printf("  %-28s %9.2f ms\n", name, ms);
    return ms;
}

}  // namespace

int main() {
    std::printf("moment verification (n=4, 400 points, t=6)\n");
    WeightedPointSet X = random_config(4, 400, 7);
    double s = timed("serial", [&] { verify_design_moments_serial(X, 6); });
    double p = timed("parallel", [&] { verify_design_moments(X, 6); });
    std::printf("  speedup %.2fx\n", s / p);

    std::printf("harmonic verification (n=4, 400 points, t=6)\n");
    s = timed("serial", [&] { verify_design_harmonic_serial(X, 6); });
    p = timed("parallel", [&] { verify_design_harmonic(X, 6); });
    std::printf("  speedup %.2fx\n", s / p);

    std::printf("resultant elimination (n=7 master equations, N1=46)\n");
    CandidateParams cand{7, 120, 46, 74, WeightMode::nonconstant};
    BiPolyZ p1 = clear_to_integer(eq27_poly(1, cand));
    BiPolyZ p2 = clear_to_integer(eq27_poly(2, cand));
    s = timed("serial", [&] { resultant_eliminate_w1_serial(p1, p2); });
    p = timed("parallel", [&] { resultant_eliminate_w1(p1, p2); });
    std::printf("  speedup %.2fx\n", s / p);
    return 0;
}
