#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eud/gegenbauer.hpp"
#include "eud/harmonic.hpp"
#include "eud/linalg.hpp"
#include "eud/mpoly.hpp"
#include "eud/resultant.hpp"
#include "eud/roots.hpp"
#include "eud/unipoly.hpp"

using namespace eud;

TEST_CASE("rational parsing covers decimals and mixed fractions") {
    CHECK(parse_rational("-1") == Rational(-1));
    CHECK(parse_rational("325/32") == Rational(325, 32));
    CHECK(parse_rational("2.236") == Rational(559, 250));
    CHECK(parse_rational("2.236/7") == Rational(559, 1750));
    CHECK(parse_rational("-4.583/21") == Rational(-4583, 21000));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("unipoly arithmetic and calculus") {
    UniPoly p({Rational(1), Rational(2), Rational(3)});  // 1 + 2x + 3x^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(2)) == Rational(17));
    CHECK(p.derivative() == UniPoly({Rational(2), Rational(6)}));
    CHECK(p.integral().derivative() == p);
    CHECK((p - p).is_zero());
    UniPoly q = p * p;
    CHECK(q.degree() == 4);
    CHECK(q.eval(Rational(2)) == Rational(289));
}

TEST_CASE("unipoly cleared strips denominators and content") {
    UniPoly p({Rational(1, 2), Rational(3, 4), Rational(1)});
    auto c = p.cleared();
    REQUIRE(c.size() == 3);
    CHECK(c[0] == 2);
    CHECK(c[1] == 3);
    CHECK(c[2] == 4);
}

TEST_CASE("aberth recovers exact integer roots") {
    // (x-1)(x-2)(x-3) = -6 + 11x - 6x^2 + x^3
    auto r = aberth_roots({Complex(-6), Complex(11), Complex(-6), Complex(1)});
    REQUIRE(r.size() == 3);
    CHECK(std::abs(r[0] - Complex(1)) < 1e-12L);
    CHECK(std::abs(r[1] - Complex(2)) < 1e-12L);
    CHECK(std::abs(r[2] - Complex(3)) < 1e-12L);
}

TEST_CASE("aberth handles complex pairs and zero roots") {
    // x^2 (x^2 + 1)
    auto r = aberth_roots(
        {Complex(0), Complex(0), Complex(1), Complex(0), Complex(1)});
    REQUIRE(r.size() == 4);
    // sorted by (re, im): -i, 0, 0, +i
    CHECK(std::abs(r[0] - Complex(0, -1)) < 1e-12L);
    CHECK(std::abs(r[1]) == 0.0L);
    CHECK(std::abs(r[2]) == 0.0L);
    CHECK(std::abs(r[3] - Complex(0, 1)) < 1e-12L);
    CHECK_THROWS_AS(aberth_roots({Complex(5)}), std::invalid_argument);
}

TEST_CASE("uni_roots validates residuals on a Gegenbauer polynomial") {
    UniPoly g = gegenbauer(7, 3);
    auto roots = uni_roots(g);
    REQUIRE(roots.size() == 3);
    for (const auto& z : roots) {
        CHECK(std::abs(z.imag()) < 1e-12L);
        CHECK(std::abs(g.eval(Complex(z))) < 1e-9L);
    }
}

TEST_CASE("gegenbauer normalization Q_l(1) = harm_dim") {
    for (int n = 2; n <= 8; ++n)
        for (int l = 0; l <= 4; ++l)
            CHECK(gegenbauer(n, l).eval(Rational(1)) ==
                  Rational(harm_dim(n, l)));
    // n = 2 gives the doubled Chebyshev values: Q_l(cos t) = 2 cos(lt)
    UniPoly q3 = gegenbauer(2, 3);
    CHECK(q3.eval(Rational(0)) == Rational(0));
    CHECK(q3.eval(Rational(-1)) == Rational(-2));
}

TEST_CASE("harmonic basis dimension and Laplacian kernel") {
    for (int n = 2; n <= 5; ++n)
        for (int l = 1; l <= 4; ++l) {
            auto basis = harmonic_basis(n, l);
            CHECK((long)basis.size() == harm_dim(n, l));
            for (const auto& p : basis) {
                MPoly lap = laplacian(p);
                CHECK(lap == MPoly(n));
            }
        }
}

TEST_CASE("mpoly eval agrees between exact and floating") {
    MPoly p = MPoly::variable(2, 0) * MPoly::variable(2, 1) +
              MPoly(2, Rational(3, 7));
    Rational ex = p.eval_exact({Rational(2, 3), Rational(5, 2)});
    CHECK(ex == Rational(2, 3) * Rational(5, 2) + Rational(3, 7));
    Real fl = p.eval(std::vector<Real>{2.0L / 3.0L, 2.5L});
    CHECK(std::abs(fl - to_real(ex)) < 1e-15L);
}

TEST_CASE("clear_to_integer preserves the zero set") {
    // p = (1/2) R w1 + (3/4) R - 5
    MPoly p(2);
    p += MPoly::monomial(2, {1, 1}, Rational(1, 2));
    p += MPoly::monomial(2, {1, 0}, Rational(3, 4));
    p += MPoly(2, Rational(-5));
    BiPolyZ z = clear_to_integer(p);
    // 2 R w1 + 3 R - 20
    CHECK(z.deg_w1() == 1);
    CHECK(z.deg_R() == 1);
    Complex at = z.eval(Complex(4), Complex(1));  // 8 + 12 - 20 = 0
    CHECK(std::abs(at) < 1e-15L);
}

TEST_CASE("resultant eliminates w1 on a known system") {
    // f = R + w1 - 3, g = R*w1 - 2 -> res ~ R^2 - 3R + 2 (roots 1, 2)
    BiPolyZ f, g;
    f.coeff = {{Integer(-3), Integer(1)}, {Integer(1)}};
    g.coeff = {{Integer(-2)}, {Integer(0), Integer(1)}};
    UniPoly res = resultant_eliminate_w1(f, g);
    REQUIRE(res.degree() == 2);
    CHECK(res.eval(Rational(1)) == 0);
    CHECK(res.eval(Rational(2)) == 0);
    CHECK(resultant_eliminate_w1_serial(f, g) == res);
}

TEST_CASE("resultant of dependent polynomials is zero") {
    // g = 2f shares the full zero set
    BiPolyZ f, g;
    f.coeff = {{Integer(-3), Integer(1)}, {Integer(1)}};
    g.coeff = {{Integer(-6), Integer(2)}, {Integer(2)}};
    CHECK(resultant_eliminate_w1(f, g).is_zero());
}

TEST_CASE("strip_unit_radius_factor removes (R-1)^k exactly") {
    // (R - 1)^2 * (w1 + 2R)
    BiPolyZ p;
    p.coeff = {{Integer(0), Integer(2), Integer(-4), Integer(2)},
               {Integer(1), Integer(-2), Integer(1)}};
    CHECK(strip_unit_radius_factor(p) == 2);
    REQUIRE(p.coeff.size() == 2);
    CHECK(p.coeff[1] == std::vector<Integer>{Integer(1)});
    CHECK(p.coeff[0] == (std::vector<Integer>{Integer(0), Integer(2)}));
    CHECK(strip_unit_radius_factor(p) == 0);
}

TEST_CASE("divide_linear_w1_factor performs exact trial division") {
    // (3 + 2 w1)(5R + w1) = 15R + (3 + 10R) w1 + 2 w1^2
    BiPolyZ p;
    p.coeff = {{Integer(0), Integer(15)},
               {Integer(3), Integer(10)},
               {Integer(2)}};
    CHECK(divide_linear_w1_factor(p, {Rational(3)}, Rational(2)));
    // quotient 5R + w1
    REQUIRE(p.coeff.size() == 2);
    CHECK(p.coeff[0] == (std::vector<Integer>{Integer(0), Integer(5)}));
    CHECK(p.coeff[1] == std::vector<Integer>{Integer(1)});
    // does not divide again
    CHECK_FALSE(divide_linear_w1_factor(p, {Rational(3)}, Rational(2)));
}

TEST_CASE("integer determinant matches cofactor expansion") {
    std::vector<std::vector<Integer>> m = {
        {Integer(2), Integer(-1), Integer(0)},
        {Integer(1), Integer(3), Integer(4)},
        {Integer(0), Integer(5), Integer(-2)}};
    CHECK(integer_determinant(m) == Integer(2 * (3 * -2 - 20) -
                                            (-1) * (1 * -2 - 0) +
                                            0));
}

TEST_CASE("rational matrix inverse round-trips") {
    RMatrix a = {{Rational(1), Rational(2)}, {Rational(3), Rational(5)}};
    RMatrix inv = inverse(a);
    CHECK(matmul(a, inv) == identity_matrix(2));
}
