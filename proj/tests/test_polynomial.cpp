#include <catch_amalgamated.hpp>

#include <complex>

#include "isinglab/io.hpp"
#include "isinglab/polynomial.hpp"
#include "isinglab/roots.hpp"

using namespace isinglab;
using Catch::Approx;

TEST_CASE("ring arithmetic") {
    IntegerPolynomial one_plus(std::vector<BigInt>{1, 1});
    IntegerPolynomial one_minus(std::vector<BigInt>{1, -1});
    REQUIRE(one_plus * one_minus == IntegerPolynomial(std::vector<BigInt>{1, 0, -1}));

    IntegerPolynomial p(std::vector<BigInt>{3, 0, 7});
    REQUIRE(p + IntegerPolynomial() == p);

    IntegerPolynomial k2(std::vector<BigInt>{2, 2});  // 2b+2
    REQUIRE(k2 * k2 == IntegerPolynomial(std::vector<BigInt>{4, 8, 4}));

    REQUIRE((p - p).is_zero());
    REQUIRE(p.shifted(2) == IntegerPolynomial(std::vector<BigInt>{0, 0, 3, 0, 7}));
    REQUIRE(one_plus.pow(2) == IntegerPolynomial(std::vector<BigInt>{1, 2, 1}));
    REQUIRE((p * one_plus).degree() == p.degree() + one_plus.degree());
}

TEST_CASE("evaluation") {
    IntegerPolynomial zc3(std::vector<BigInt>{0, 6, 0, 2});  // 2b^3+6b
    REQUIRE(zc3.eval(BigInt(1)) == 8);                       // 2^3 colourings of C3
    IntegerPolynomial cubic(std::vector<BigInt>{1, 0, 0, 1});  // 1+x^3
    REQUIRE(cubic.eval(Complex(0, 0)) == Complex(1, 0));
    Complex at_i = cubic.eval(Complex(0, 1));
    REQUIRE(at_i.real() == Approx(1.0));
    REQUIRE(at_i.imag() == Approx(-1.0));

    HpComplex hp = cubic.eval_hp(Complex(0, 1));
    REQUIRE(static_cast<double>(hp.real()) == Approx(1.0));
    REQUIRE(static_cast<double>(hp.imag()) == Approx(-1.0));
}

TEST_CASE("compose_scale is exact") {
    IntegerPolynomial p(std::vector<BigInt>{1, 2, 4});
    RationalPolynomial q = compose_scale(p, BigRational(1, 2));  // p(x/2)
    REQUIRE(q.coefficients() ==
            std::vector<BigRational>{BigRational(1), BigRational(1), BigRational(1)});
}

TEST_CASE("roots of simple polynomials") {
    auto r = roots(IntegerPolynomial(std::vector<BigInt>{2, 2}));  // 2b+2
    REQUIRE(r.size() == 1);
    REQUIRE(std::abs(r[0] - Complex(-1, 0)) < 1e-12);

    r = roots(IntegerPolynomial(std::vector<BigInt>{1, 0, 1}));  // b^2+1
    REQUIRE(r.size() == 2);
    REQUIRE(std::abs(r[0] - Complex(0, -1)) < 1e-12);
    REQUIRE(std::abs(r[1] - Complex(0, 1)) < 1e-12);

    REQUIRE_THROWS_AS(roots(IntegerPolynomial()), ArgumentError);
}

TEST_CASE("C4 Ising roots lie on the Moebius unit circle") {
    // (b+1)^4 + (b-1)^4: the closed form puts (b-1)/(b+1) at fourth roots of -1
    IntegerPolynomial p = IntegerPolynomial(std::vector<BigInt>{1, 1}).pow(4) +
                          IntegerPolynomial(std::vector<BigInt>{-1, 1}).pow(4);
    auto r = roots(p);
    REQUIRE(r.size() == 4);
    for (Complex b : r) {
        double m = std::abs((b - 1.0) / (b + 1.0));
        REQUIRE(m == Approx(1.0).margin(1e-10));
    }
}

TEST_CASE("monic reconstruction from roots") {
    IntegerPolynomial p(std::vector<BigInt>{-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
    auto r = roots(p);
    std::vector<Complex> rec{1};
    for (Complex z : r) {
        std::vector<Complex> nxt(rec.size() + 1, Complex(0, 0));
        for (std::size_t i = 0; i < rec.size(); ++i) {
            nxt[i + 1] += rec[i];
            nxt[i] -= rec[i] * z;
        }
        rec = nxt;
    }
    std::vector<double> want{-6, 11, -6, 1};
    for (std::size_t i = 0; i < rec.size(); ++i) {
        REQUIRE(rec[i].real() == Approx(want[i]).margin(1e-9));
        REQUIRE(rec[i].imag() == Approx(0.0).margin(1e-9));
    }
}

TEST_CASE("multiple roots certify by residual") {
    // (b+1)^7, the Ising polynomial shape of trees, has one root of
    // multiplicity 7; Aberth returns a certified cluster around -1
    IntegerPolynomial p = IntegerPolynomial(std::vector<BigInt>{1, 1}).pow(7);
    auto r = roots(p, 1e-9);
    REQUIRE(r.size() == 7);
    for (Complex z : r) REQUIRE(std::abs(z + 1.0) < 0.05);
    for (Complex z : r) {
        double residual = static_cast<double>(abs(p.eval_hp(z)));
        REQUIRE(residual <= 1e-9 * p.coefficient_norm() *
                                std::pow(std::max(1.0, std::abs(z)), p.degree()));
    }
}

TEST_CASE("non-convergence carries diagnostics") {
    // an unreachable tolerance forces the residual certificate to fail
    IntegerPolynomial p(std::vector<BigInt>{3, 0, 1});  // b^2 + 3, irrational roots
    try {
        roots(p, 1e-40);
        FAIL("expected RootConvergenceError");
    } catch (const RootConvergenceError& e) {
        REQUIRE(e.best_iterates.size() == 2);
        for (Complex z : e.best_iterates) REQUIRE(std::abs(p.eval(z)) < 1e-10);
    }
}

TEST_CASE("zero roots are exact") {
    IntegerPolynomial p(std::vector<BigInt>{0, 0, 6, 2});  // 2b^3+6b^2
    auto r = roots(p);
    REQUIRE(r.size() == 3);
    int zeros = 0;
    for (Complex z : r)
        if (z == Complex(0, 0)) ++zeros;
    REQUIRE(zeros == 2);
}

TEST_CASE("json coefficients keep precision") {
    BigInt big("123456789012345678901234567890");
    IntegerPolynomial p(std::vector<BigInt>{big, -big, 1});
    Json j = poly_to_json(p);
    REQUIRE(j[0].get<std::string>() == "123456789012345678901234567890");
    REQUIRE(poly_from_json(j) == p);
}

TEST_CASE("complex literals") {
    REQUIRE(parse_complex("1.5") == Complex(1.5, 0));
    REQUIRE(parse_complex("-2i") == Complex(0, -2));
    REQUIRE(parse_complex("0.3+0.1i") == Complex(0.3, 0.1));
    REQUIRE(parse_complex("1-2i") == Complex(1, -2));
    REQUIRE(parse_complex("i") == Complex(0, 1));
    REQUIRE(parse_complex("-i") == Complex(0, -1));
    REQUIRE(parse_complex("1e-3+2e-4i") == Complex(1e-3, 2e-4));
    REQUIRE_THROWS_AS(parse_complex("abc"), ParseError);
}
