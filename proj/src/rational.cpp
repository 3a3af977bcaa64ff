#include "umq/rational.hpp"

#include <cctype>

#include "umq/errors.hpp"

namespace umq {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    if (!is_integer_text(num_text)) {
        throw Error("FormatError", "not a rational: '" + std::string(text) + "'");
    }
    Integer num(std::string(num_text), 10);
    if (slash == std::string_view::npos) {
        return Rational(num);
    }
    const std::string_view den_text = text.substr(slash + 1);
    if (!is_integer_text(den_text) || den_text[0] == '-') {
        throw Error("FormatError", "not a rational: '" + std::string(text) + "'");
    }
    Integer den(std::string(den_text), 10);
    if (den == 0) {
        throw Error("FormatError", "zero denominator in '" + std::string(text) + "'");
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        throw Error("FormatError",
                    "non-canonical rational '" + std::string(text) + "' (not in lowest terms)");
    }
    Rational r;
    mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
    return r;
}

Rational frac(long num, long den) {
    if (den == 0) {
        throw Error("FormatError", "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp > 100000000L || exp < -100000000L) {
        throw Error("InternalError", "integer exponent out of supported range");
    }
    const bool negative = exp < 0;
    const unsigned long e = negative ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    if (negative && base == 0) {
        throw Error("InternalError", "0 raised to a negative power");
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational r;
    if (negative) {
        mpq_set_num(r.get_mpq_t(), den.get_mpz_t());
        mpq_set_den(r.get_mpq_t(), num.get_mpz_t());
    } else {
        mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
        mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
    }
    mpq_canonicalize(r.get_mpq_t());
    return r;
}

std::optional<Rational> rational_root(const Rational& value, unsigned long n) {
    if (n == 1) return value;
    if (value < 0) return std::nullopt;
    Integer num_root, den_root;
    // mpz_root reports whether the truncated root is exact.
    const bool num_exact = mpz_root(num_root.get_mpz_t(), value.get_num().get_mpz_t(), n) != 0;
    if (!num_exact) return std::nullopt;
    const bool den_exact = mpz_root(den_root.get_mpz_t(), value.get_den().get_mpz_t(), n) != 0;
    if (!den_exact) return std::nullopt;
    Rational r;
    mpq_set_num(r.get_mpq_t(), num_root.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), den_root.get_mpz_t());
    // roots of a canonical fraction are coprime already
    return r;
}

std::optional<Rational> rational_pow_exact(const Rational& base, const Rational& exp) {
    const Integer& p = exp.get_num();
    const Integer& q = exp.get_den();
    if (!p.fits_slong_p() || !q.fits_ulong_p()) {
        throw Error("InternalError", "exponent out of supported range");
    }
    const Rational powered = rational_pow(base, p.get_si());
    return rational_root(powered, q.get_ui());
}

}  // namespace umq
