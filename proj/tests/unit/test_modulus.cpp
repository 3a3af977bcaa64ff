#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "umq/modulus.hpp"

using namespace umq;
using umqtest::error_code_of;

TEST_CASE("parse and serialize round trips") {
    for (const char* spec : {"linear:2", "linear:1/3", "power:2", "power:1/2",
                             "power:2,3", "power:1/2,3^1/2", "pl:(1,2)", "pl:(1,1);(2,3);(5,11)",
                             "dual-pl:(1,1);(2,3)"}) {
        CHECK(Modulus::parse(spec).to_string() == spec);
    }
}

TEST_CASE("malformed specs are rejected") {
    CHECK(error_code_of([] { Modulus::parse("t^2"); }) == "FormatError");
    CHECK(error_code_of([] { Modulus::parse("power:"); }) == "FormatError");
    CHECK(error_code_of([] { Modulus::parse("linear:0"); }) == "NotInvertible");
    CHECK(error_code_of([] { Modulus::parse("linear:-2"); }) == "NotInvertible");
    CHECK(error_code_of([] { Modulus::parse("power:0"); }) == "NotInvertible");
    CHECK(error_code_of([] { Modulus::parse("power:2,0"); }) == "NotInvertible");
    CHECK(error_code_of([] { Modulus::parse("pl:"); }) == "NotInvertible");
    CHECK(error_code_of([] { Modulus::parse("pl:(1,2);(1,3)"); }) == "NotInvertible");
    CHECK(error_code_of([] { Modulus::parse("pl:(1,2);(2,2)"); }) == "NotInvertible");
    CHECK(error_code_of([] { Modulus::parse("pl:(0,0);(1,1)"); }) == "NotInvertible");
}

TEST_CASE("linear evaluation and the inverse-modulus fixture") {
    const Modulus eta = Modulus::parse("linear:2");
    CHECK(*eta.evaluate(Rational(3)) == 6);
    CHECK(*eta.evaluate_inverse(Rational(6)) == 3);

    // eta'(t) = 1/eta^{-1}(1/t) keeps linear specs fixed: eta'(3) = 6
    const Modulus dual = eta.inverse_modulus();
    CHECK(dual.to_string() == "linear:2");
    CHECK(*dual.evaluate(Rational(3)) == 6);
}

TEST_CASE("power evaluation is exact exactly when the value is rational") {
    const Modulus sq = Modulus::parse("power:2");
    CHECK(*sq.evaluate(Rational(4)) == 16);
    CHECK(*sq.evaluate(Rational(1, 3)) == Rational(1, 9));
    CHECK(*sq.evaluate(Rational(0)) == 0);

    const Modulus root = sq.inverse_modulus();
    CHECK(root.to_string() == "power:1/2");
    CHECK(*root.evaluate(Rational(9)) == 3);
    CHECK(*root.evaluate(Rational(4, 9)) == Rational(2, 3));
    CHECK(!root.evaluate(Rational(2)).has_value());

    // symbolic coefficients multiply out exactly when the product is rational
    const Modulus scaled = Modulus::parse("power:1/2,3^1/2");
    CHECK(*scaled.evaluate(Rational(3)) == 3);        // sqrt(3)*sqrt(3)
    CHECK(*scaled.evaluate(Rational(27)) == 9);       // sqrt(3)*sqrt(27)
    CHECK(!scaled.evaluate(Rational(2)).has_value());  // sqrt(6) is irrational
}

TEST_CASE("power comparisons are exact even at irrational values") {
    const Modulus root = Modulus::parse("power:1/2");
    // sqrt(2) vs 3/2: 2 < 9/4
    CHECK(root.compare(Rational(2), Rational(3, 2)) < 0);
    // sqrt(2) vs 7/5: 2 > 49/25
    CHECK(root.compare(Rational(2), Rational(7, 5)) > 0);
    CHECK(root.compare(Rational(4), Rational(2)) == 0);

    const Modulus sq = Modulus::parse("power:2");
    CHECK(sq.compare(Rational(3), Rational(9)) == 0);
    CHECK(sq.compare(Rational(3), Rational(10)) < 0);
    CHECK(sq.compare(Rational(0), Rational(0)) == 0);
    CHECK(sq.compare(Rational(5), Rational(-1)) > 0);
}

TEST_CASE("power inverse-modulus fixture") {
    // eta(t)=t^2 has eta'(t)=t^{1/2}
    const Modulus dual = Modulus::parse("power:2").inverse_modulus();
    CHECK(dual.to_string() == "power:1/2");
    CHECK(*dual.evaluate(Rational(9)) == 3);
}

TEST_CASE("piecewise-linear evaluation, inversion and extension") {
    const Modulus pl = Modulus::parse("pl:(1,1);(2,3);(5,11)");
    CHECK(*pl.evaluate(Rational(0)) == 0);
    CHECK(*pl.evaluate(Rational(1, 2)) == Rational(1, 2));
    CHECK(*pl.evaluate(Rational(3, 2)) == 2);
    CHECK(*pl.evaluate(Rational(5)) == 11);
    // beyond the last breakpoint the final slope (11-3)/(5-2) continues
    CHECK(*pl.evaluate(Rational(8)) == 19);
    CHECK(*pl.evaluate_inverse(Rational(2)) == Rational(3, 2));
    CHECK(*pl.evaluate_inverse(Rational(19)) == 8);
    // evaluate and invert agree
    for (int i = 0; i <= 20; ++i) {
        const Rational t = frac(i, 3);
        CHECK(*pl.evaluate_inverse(*pl.evaluate(t)) == t);
    }
}

TEST_CASE("the dual of a piecewise-linear modulus satisfies the duality pointwise") {
    const Modulus pl = Modulus::parse("pl:(1,1);(2,3);(5,11)");
    const Modulus dual = pl.inverse_modulus();
    CHECK(dual.kind() == Modulus::Kind::DualPiecewiseLinear);
    for (int i = 1; i <= 15; ++i) {
        const Rational t = frac(i, 2);
        const Rational expected = 1 / *pl.evaluate_inverse(1 / t);
        CHECK(*dual.evaluate(t) == expected);
        // the dual is its own inverse through the same identity
        CHECK(*dual.evaluate_inverse(*dual.evaluate(t)) == t);
    }
    CHECK(*dual.evaluate(Rational(0)) == 0);
}

TEST_CASE("applying the inverse-modulus transform twice is the identity") {
    const std::vector<const char*> specs = {"linear:2", "linear:5/3", "power:2", "power:3,7",
                                            "pl:(1,1);(2,3);(5,11)", "pl:(2,5)"};
    for (const char* spec : specs) {
        const Modulus eta = Modulus::parse(spec);
        const Modulus twice = eta.inverse_modulus().inverse_modulus();
        CHECK(twice.to_string() == eta.to_string());
        for (int i = 0; i <= 20; ++i) {
            const Rational t = frac(2 * i + 1, 7);
            const auto a = eta.evaluate(t);
            const auto b = twice.evaluate(t);
            CHECK(a.has_value() == b.has_value());
            if (a && b) CHECK(*a == *b);
        }
    }
}

TEST_CASE("moduli are strictly increasing where evaluable") {
    for (const char* spec : {"linear:3", "power:2", "power:1/2", "pl:(1,2);(3,4)"}) {
        const Modulus eta = Modulus::parse(spec);
        Rational prev(-1);
        for (int i = 0; i <= 12; ++i) {
            const Rational t = frac(i * i, 4);  // includes 0 and values past breakpoints
            if (const auto v = eta.evaluate(t)) {
                CHECK(*v > prev);
                prev = *v;
            }
        }
    }
}
