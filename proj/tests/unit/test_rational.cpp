#include <doctest.h>

#include "support.hpp"
#include "umq/rational.hpp"

using namespace umq;
using umqtest::error_code_of;

TEST_CASE("parse accepts canonical rationals") {
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-5/3") == Rational(-5, 3));
    CHECK(to_string(parse_rational("22/7")) == "22/7");
    CHECK(to_string(parse_rational("4")) == "4");
}

TEST_CASE("parse rejects non-canonical and malformed input") {
    CHECK(error_code_of([] { parse_rational("2/4"); }) == "FormatError");
    CHECK(error_code_of([] { parse_rational("4/2"); }) == "FormatError");
    CHECK(error_code_of([] { parse_rational("0/3"); }) == "FormatError");
    CHECK(error_code_of([] { parse_rational("1/-2"); }) == "FormatError");
    CHECK(error_code_of([] { parse_rational("1/0"); }) == "FormatError");
    CHECK(error_code_of([] { parse_rational(""); }) == "FormatError");
    CHECK(error_code_of([] { parse_rational("a"); }) == "FormatError");
    CHECK(error_code_of([] { parse_rational("1.5"); }) == "FormatError");
    CHECK(error_code_of([] { parse_rational("+2"); }) == "FormatError");
    CHECK(error_code_of([] { parse_rational("1/"); }) == "FormatError");
}

TEST_CASE("integer powers of rationals") {
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rational_pow(Rational(5), 0) == 1);
    CHECK(rational_pow(Rational(-2), 3) == -8);
}

TEST_CASE("exact roots detect perfect powers") {
    CHECK(*rational_root(Rational(8, 27), 3) == Rational(2, 3));
    CHECK(*rational_root(Rational(9), 2) == 3);
    CHECK(!rational_root(Rational(2), 2).has_value());
    CHECK(!rational_root(Rational(8, 26), 3).has_value());
    CHECK(*rational_root(Rational(0), 5) == 0);
}

TEST_CASE("rational powers with fractional exponents") {
    CHECK(*rational_pow_exact(Rational(4), Rational(1, 2)) == 2);
    CHECK(*rational_pow_exact(Rational(27, 8), Rational(2, 3)) == Rational(9, 4));
    CHECK(!rational_pow_exact(Rational(3), Rational(1, 2)).has_value());
}
