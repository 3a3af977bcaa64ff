#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umq/rational.hpp"

namespace umq {

/// An increasing homeomorphism eta of [0,inf) onto itself, in one of four
/// closed forms:
///
///   linear          eta(t) = C*t
///   power           eta(t) = Cbase^Cexp * t^alpha          (alpha > 0)
///   piecewise-linear  strictly increasing polyline through (0,0) and the
///                     given breakpoints, extended past the last breakpoint
///                     with the final segment's slope
///   dual-pl         eta(t) = 1 / pl^{-1}(1/t) for a stored piecewise-linear
///                   pl; arises as the inverse modulus of a pl spec and is
///                   not itself piecewise-linear
///
/// Values of linear, pl and dual-pl specs are exact rationals. A power spec
/// may take irrational values; evaluate() then returns nullopt, but compare()
/// still decides eta(t) <=> r exactly by cross-multiplied integer-power
/// comparisons. The symbolic Cbase^Cexp form keeps power specs closed under
/// the inverse-modulus transform eta'(t) = 1/eta^{-1}(1/t).
class Modulus {
public:
    enum class Kind { Linear, Power, PiecewiseLinear, DualPiecewiseLinear };

    static Modulus linear(const Rational& c);
    static Modulus power(const Rational& alpha, const Rational& c = Rational(1));
    static Modulus power_symbolic(const Rational& cbase, const Rational& cexp,
                                  const Rational& alpha);
    static Modulus piecewise_linear(std::vector<std::pair<Rational, Rational>> breakpoints);

    /// Spec strings: "linear:C", "power:alpha[,C]" (C also as "base^exp"),
    /// "pl:(t1,v1);(t2,v2);...", "dual-pl:...". Throws FormatError on
    /// unparsable text, NotInvertible on parameter sets that are not an
    /// increasing homeomorphism.
    static Modulus parse(std::string_view text);
    std::string to_string() const;

    Kind kind() const { return kind_; }

    /// Exact value of eta(t), or nullopt when it is irrational (power kind
    /// only). t must be >= 0.
    std::optional<Rational> evaluate(const Rational& t) const;

    /// Exact value of eta^{-1}(s), or nullopt when irrational. s must be >= 0.
    std::optional<Rational> evaluate_inverse(const Rational& s) const;

    /// Sign of eta(t) - r, always exact. t must be >= 0.
    int compare(const Rational& t, const Rational& r) const;
    bool dominates(const Rational& t, const Rational& r) const { return compare(t, r) >= 0; }

    /// The modulus of the inverse mapping: eta'(t) = 1 / eta^{-1}(1/t).
    /// Applying it twice returns the original spec.
    Modulus inverse_modulus() const;

private:
    Modulus() = default;

    Kind kind_ = Kind::Linear;
    Rational c_;                                         // linear
    Rational cbase_, cexp_, alpha_;                      // power
    std::vector<std::pair<Rational, Rational>> points_;  // pl / dual-pl

    Rational eval_pl(const Rational& t) const;
    Rational eval_pl_inverse(const Rational& s) const;
};

}  // namespace umq
