#include "umq/modulus.hpp"

#include <algorithm>
#include <numeric>

#include "umq/errors.hpp"

namespace umq {

namespace {

// exponent arithmetic below multiplies these by an lcm of denominators, so
// keep them small enough that integer powers stay tractable
long to_long(const Integer& z, const char* what) {
    if (!z.fits_slong_p() || z > 10000 || z < -10000) {
        throw Error("InternalError", std::string("exponent out of supported range in ") + what);
    }
    return z.get_si();
}

void require_domain(const Rational& t) {
    if (t < 0) {
        throw Error("InternalError", "modulus argument " + to_string(t) + " outside [0,inf)");
    }
}

}  // namespace

Modulus Modulus::linear(const Rational& c) {
    if (c <= 0) {
        throw Error("NotInvertible", "linear modulus needs C > 0, got " + umq::to_string(c));
    }
    Modulus m;
    m.kind_ = Kind::Linear;
    m.c_ = c;
    return m;
}

Modulus Modulus::power(const Rational& alpha, const Rational& c) {
    return power_symbolic(c, Rational(1), alpha);
}

Modulus Modulus::power_symbolic(const Rational& cbase, const Rational& cexp,
                                const Rational& alpha) {
    if (alpha <= 0) {
        throw Error("NotInvertible", "power modulus needs alpha > 0, got " + umq::to_string(alpha));
    }
    if (cbase <= 0) {
        throw Error("NotInvertible", "power modulus needs C > 0, got " + umq::to_string(cbase));
    }
    Modulus m;
    m.kind_ = Kind::Power;
    m.cbase_ = cbase;
    m.cexp_ = cbase == 1 ? Rational(1) : cexp;  // 1^x: keep a canonical exponent
    m.alpha_ = alpha;
    return m;
}

Modulus Modulus::piecewise_linear(std::vector<std::pair<Rational, Rational>> breakpoints) {
    if (breakpoints.empty()) {
        throw Error("NotInvertible", "piecewise-linear modulus needs at least one breakpoint");
    }
    Rational prev_t(0), prev_v(0);
    for (const auto& [t, v] : breakpoints) {
        if (!(t > prev_t) || !(v > prev_v)) {
            throw Error("NotInvertible",
                        "piecewise-linear breakpoints must be strictly increasing from (0,0); "
                        "offending point (" +
                            umq::to_string(t) + "," + umq::to_string(v) + ")");
        }
        prev_t = t;
        prev_v = v;
    }
    Modulus m;
    m.kind_ = Kind::PiecewiseLinear;
    m.points_ = std::move(breakpoints);
    return m;
}

// ---- parsing ----------------------------------------------------------

namespace {

Rational parse_power_coefficient(std::string_view text, Rational& cexp) {
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) {
        cexp = Rational(1);
        return parse_rational(text);
    }
    cexp = parse_rational(text.substr(caret + 1));
    return parse_rational(text.substr(0, caret));
}

std::vector<std::pair<Rational, Rational>> parse_breakpoints(std::string_view text) {
    std::vector<std::pair<Rational, Rational>> pts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(') {
            throw Error("FormatError", "expected '(' in breakpoint list");
        }
        const auto comma = text.find(',', pos);
        const auto close = text.find(')', pos);
        if (comma == std::string_view::npos || close == std::string_view::npos || comma > close) {
            throw Error("FormatError", "malformed breakpoint in '" + std::string(text) + "'");
        }
        pts.emplace_back(parse_rational(text.substr(pos + 1, comma - pos - 1)),
                         parse_rational(text.substr(comma + 1, close - comma - 1)));
        pos = close + 1;
        if (pos < text.size()) {
            if (text[pos] != ';') {
                throw Error("FormatError", "expected ';' between breakpoints");
            }
            ++pos;
        }
    }
    return pts;
}

}  // namespace

Modulus Modulus::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw Error("FormatError", "modulus spec '" + std::string(text) +
                                       "' has no kind prefix (linear:, power:, pl:, dual-pl:)");
    }
    const std::string_view head = text.substr(0, colon);
    const std::string_view body = text.substr(colon + 1);
    if (head == "linear") {
        return linear(parse_rational(body));
    }
    if (head == "power") {
        const auto comma = body.find(',');
        if (comma == std::string_view::npos) {
            return power(parse_rational(body));
        }
        Rational cexp;
        const Rational cbase = parse_power_coefficient(body.substr(comma + 1), cexp);
        return power_symbolic(cbase, cexp, parse_rational(body.substr(0, comma)));
    }
    if (head == "pl") {
        return piecewise_linear(parse_breakpoints(body));
    }
    if (head == "dual-pl") {
        Modulus m = piecewise_linear(parse_breakpoints(body));
        m.kind_ = Kind::DualPiecewiseLinear;
        return m;
    }
    throw Error("FormatError", "unknown modulus kind '" + std::string(head) + "'");
}

std::string Modulus::to_string() const {
    switch (kind_) {
        case Kind::Linear:
            return "linear:" + umq::to_string(c_);
        case Kind::Power: {
            std::string s = "power:" + umq::to_string(alpha_);
            if (cbase_ != 1) {
                s += "," + umq::to_string(cbase_);
                if (cexp_ != 1) {
                    s += "^" + umq::to_string(cexp_);
                }
            }
            return s;
        }
        case Kind::PiecewiseLinear:
        case Kind::DualPiecewiseLinear: {
            std::string s = kind_ == Kind::PiecewiseLinear ? "pl:" : "dual-pl:";
            for (std::size_t i = 0; i < points_.size(); ++i) {
                if (i > 0) s += ";";
                s += "(" + umq::to_string(points_[i].first) + "," +
                     umq::to_string(points_[i].second) + ")";
            }
            return s;
        }
    }
    return {};
}

// ---- evaluation --------------------------------------------------------

Rational Modulus::eval_pl(const Rational& t) const {
    // segments: (0,0) -> points_[0] -> ... -> points_.back(), then the final
    // slope continues
    Rational t0(0), v0(0);
    for (const auto& [t1, v1] : points_) {
        if (t <= t1) {
            return v0 + (t - t0) * (v1 - v0) / (t1 - t0);
        }
        t0 = t1;
        v0 = v1;
    }
    const std::size_t k = points_.size();
    const Rational last_t0 = k >= 2 ? points_[k - 2].first : Rational(0);
    const Rational last_v0 = k >= 2 ? points_[k - 2].second : Rational(0);
    const Rational slope = (points_.back().second - last_v0) / (points_.back().first - last_t0);
    return points_.back().second + (t - points_.back().first) * slope;
}

Rational Modulus::eval_pl_inverse(const Rational& s) const {
    Rational t0(0), v0(0);
    for (const auto& [t1, v1] : points_) {
        if (s <= v1) {
            return t0 + (s - v0) * (t1 - t0) / (v1 - v0);
        }
        t0 = t1;
        v0 = v1;
    }
    const std::size_t k = points_.size();
    const Rational last_t0 = k >= 2 ? points_[k - 2].first : Rational(0);
    const Rational last_v0 = k >= 2 ? points_[k - 2].second : Rational(0);
    const Rational slope = (points_.back().second - last_v0) / (points_.back().first - last_t0);
    return points_.back().first + (s - points_.back().second) / slope;
}

std::optional<Rational> Modulus::evaluate(const Rational& t) const {
    require_domain(t);
    switch (kind_) {
        case Kind::Linear:
            return c_ * t;
        case Kind::Power: {
            if (t == 0) return Rational(0);
            // eta(t)^L is rational for L = lcm of the exponent denominators;
            // eta(t) is rational exactly when that power is a perfect L-th
            // power.
            const long u = to_long(cexp_.get_num(), "power coefficient");
            const long v = to_long(cexp_.get_den(), "power coefficient");
            const long p = to_long(alpha_.get_num(), "power exponent");
            const long q = to_long(alpha_.get_den(), "power exponent");
            const long lcm = std::lcm(v, q);
            const Rational powered =
                rational_pow(cbase_, u * (lcm / v)) * rational_pow(t, p * (lcm / q));
            return rational_root(powered, static_cast<unsigned long>(lcm));
        }
        case Kind::PiecewiseLinear:
            return eval_pl(t);
        case Kind::DualPiecewiseLinear: {
            if (t == 0) return Rational(0);
            return 1 / eval_pl_inverse(1 / t);
        }
    }
    return std::nullopt;
}

std::optional<Rational> Modulus::evaluate_inverse(const Rational& s) const {
    require_domain(s);
    switch (kind_) {
        case Kind::Linear:
            return s / c_;
        case Kind::Power: {
            if (s == 0) return Rational(0);
            // eta^{-1}(s) = (s / cbase^(u/v))^(q/p); its (p*v)-th power is
            // s^(q*v) * cbase^(-u*q), always rational.
            const long u = to_long(cexp_.get_num(), "power coefficient");
            const long v = to_long(cexp_.get_den(), "power coefficient");
            const long p = to_long(alpha_.get_num(), "power exponent");
            const long q = to_long(alpha_.get_den(), "power exponent");
            const Rational powered = rational_pow(s, q * v) * rational_pow(cbase_, -u * q);
            return rational_root(powered, static_cast<unsigned long>(p) * v);
        }
        case Kind::PiecewiseLinear:
            return eval_pl_inverse(s);
        case Kind::DualPiecewiseLinear: {
            // eta(t) = 1/pl^{-1}(1/t) inverts to eta^{-1}(s) = 1/pl(1/s)
            if (s == 0) return Rational(0);
            return 1 / eval_pl(1 / s);
        }
    }
    return std::nullopt;
}

int Modulus::compare(const Rational& t, const Rational& r) const {
    require_domain(t);
    if (kind_ != Kind::Power) {
        const Rational value = *evaluate(t);
        return cmp(value, r);
    }
    if (t == 0) {
        return cmp(Rational(0), r);
    }
    if (r <= 0) {
        return 1;  // eta(t) > 0 for t > 0
    }
    // eta(t) <=> r  iff  cbase^(u/v) * t^(p/q) <=> r; raise both sides to
    // lcm(v,q) and compare exact integer powers.
    const long u = to_long(cexp_.get_num(), "power coefficient");
    const long v = to_long(cexp_.get_den(), "power coefficient");
    const long p = to_long(alpha_.get_num(), "power exponent");
    const long q = to_long(alpha_.get_den(), "power exponent");
    const long lcm = std::lcm(v, q);
    const Rational lhs = rational_pow(cbase_, u * (lcm / v)) * rational_pow(t, p * (lcm / q));
    const Rational rhs = rational_pow(r, lcm);
    return cmp(lhs, rhs);
}

Modulus Modulus::inverse_modulus() const {
    switch (kind_) {
        case Kind::Linear:
            // 1 / ((1/t)/C) = C*t: linear specs are self-dual
            return *this;
        case Kind::Power:
            // (Cbase^Cexp * t^alpha)' = Cbase^(Cexp/alpha) * t^(1/alpha)
            return power_symbolic(cbase_, cexp_ / alpha_, 1 / alpha_);
        case Kind::PiecewiseLinear: {
            Modulus m = *this;
            m.kind_ = Kind::DualPiecewiseLinear;
            return m;
        }
        case Kind::DualPiecewiseLinear: {
            Modulus m = *this;
            m.kind_ = Kind::PiecewiseLinear;
            return m;
        }
    }
    return *this;
}

}  // namespace umq
