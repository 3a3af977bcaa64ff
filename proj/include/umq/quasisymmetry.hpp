#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "umq/ballean.hpp"
#include "umq/mapping.hpp"
#include "umq/modulus.hpp"
#include "umq/space.hpp"

namespace umq {

/// One dominance constraint induced by an ordered triple (x,a,b) of
/// pairwise-distinct points: t = d(x,a)/d(x,b), r = rho(fx,fa)/rho(fx,fb).
/// A modulus eta admits the mapping iff eta(t) >= r for every constraint.
struct Constraint {
    Rational t;
    Rational r;
    bool operator==(const Constraint& other) const { return t == other.t && r == other.r; }
};

/// The full set of distinct (t, r) pairs a finite bijection induces, sorted
/// by (t, r). Keeping every distinct pair (rather than only the max r per t)
/// makes the envelope of f^{-1} exactly the (1/r, 1/t) transform of the
/// envelope of f.
struct ConstraintEnvelope {
    std::vector<Constraint> constraints;

    /// Dominance profile: one constraint per distinct t, keeping the max r.
    std::vector<Constraint> dominant() const;
};

/// Throws Error("TooSmall") when |X| < 2 (for |X| = 2 the envelope is empty:
/// no triple of pairwise-distinct points exists).
ConstraintEnvelope envelope(const Space& source, const Space& target, const PointMap& map,
                            kernels::Exec exec = kernels::Exec::Parallel);

/// {(1/r, 1/t)} for every constraint: the envelope the inverse mapping
/// induces.
ConstraintEnvelope inverse_envelope_transform(const ConstraintEnvelope& env);

struct ModulusCheckResult {
    bool admissible = false;
    std::optional<Constraint> witness;  // first failing constraint in envelope order
};

/// eta(t) >= r for every constraint; by monotonicity of eta this is
/// equivalent to the defining implication for all triples and all t > 0.
ModulusCheckResult check_modulus(const ConstraintEnvelope& env, const Modulus& eta);

struct TripleWitness {
    int x = -1, a = -1, b = -1;
};

struct OneQsResult {
    bool one_qs = false;
    std::optional<TripleWitness> witness;
};

/// Whether some modulus with eta(1) = 1 admits the mapping: per basepoint,
/// equal distances must map to equal distances and strictly smaller to
/// strictly smaller. Witness is the first violating triple in lexicographic
/// order.
OneQsResult is_one_qs(const Space& source, const Space& target, const PointMap& map,
                      kernels::Exec exec = kernels::Exec::Parallel);

struct ImageUltrametricResult {
    bool ultrametric = false;
    std::optional<std::array<int, 3>> witness;  // target-index triple
};

/// Whether the image-side distances satisfy the strong triangle inequality
/// (the target may have been validated as a plain metric space).
ImageUltrametricResult image_ultrametric_check(const Space& source, const Space& target,
                                               const PointMap& map,
                                               kernels::Exec exec = kernels::Exec::Parallel);

struct RemarkResult {
    bool holds = false;
    std::optional<TripleWitness> witness;
};

/// Verifies both biconditionals relating the side pattern of a triple to the
/// side pattern of its image. Requires is_one_qs and two ultrametric spaces;
/// otherwise throws Error("PreconditionNotMet").
RemarkResult remark_equivalences_check(const Space& source, const Space& target,
                                       const PointMap& map,
                                       kernels::Exec exec = kernels::Exec::Parallel);

/// Distortion report for a nested pair A within B: the sharp ultrametric
/// bounds  1/eta(diamB/diamA) <= diam f(A)/diam f(B) <= eta(diamA/diamB)
/// next to the general-metric reference bounds 1/(2 eta(diamB/diamA)) and
/// eta(2 diamA/diamB). Bound values are exact rationals when the modulus
/// evaluates exactly; verdicts are always exact.
struct DiameterBoundsReport {
    Rational diam_A, diam_B, diam_fA, diam_fB;
    Rational ratio;  // diam f(A) / diam f(B)
    std::optional<Rational> sharp_lower, sharp_upper;  // 1/eta(dB/dA), eta(dA/dB)
    std::optional<Rational> ref_lower, ref_upper;      // 1/(2 eta(dB/dA)), eta(2 dA/dB)
    bool sharp_lower_ok = false, sharp_upper_ok = false;
    bool ref_lower_ok = false, ref_upper_ok = false;
    bool sharp_within_ref = false;
    std::optional<Rational> slack_lower, slack_upper;  // ratio - lower, upper - ratio
};

/// Throws NotNested (A not within B), EmptySubset, ZeroDiamA (the bound
/// requires diam A > 0) or ModulusInfeasible (eta fails check_modulus). Pass
/// a precomputed envelope to skip recomputing it per pair.
DiameterBoundsReport verify_diameter_bounds(const Space& source, const Space& target,
                                            const PointMap& map, const Modulus& eta,
                                            std::span<const int> subset_A,
                                            std::span<const int> subset_B,
                                            const ConstraintEnvelope* precomputed = nullptr);

struct PointwiseBoundsReport {
    Rational distance;  // d(x,y)
    Rational rho;       // rho(fx,fy)
    std::optional<Rational> lower, upper;
    bool lower_ok = false, upper_ok = false;
};

/// diamY / eta(diamX/d(x,y)) <= rho(fx,fy) <= diamY * eta(d(x,y)/diamX).
/// Throws SamePoint or ModulusInfeasible.
PointwiseBoundsReport pointwise_bounds(const Space& source, const Space& target,
                                       const PointMap& map, const Modulus& eta, int x, int y,
                                       const ConstraintEnvelope* precomputed = nullptr);

struct BiLipschitzReport {
    Rational L;
    bool verified = false;
    int witness_x = -1, witness_y = -1;  // first violating pair, if any
    bool upper_tight_everywhere = false;
};

/// For a mapping admitting eta(t) = C*t: L = C * max(diamY/diamX,
/// diamX/diamY), verified against the double inequality
/// d(x,y)/L <= rho(fx,fy) <= L*d(x,y) on every pair. Throws
/// ModulusInfeasible when the mapping is not Ct-quasisymmetric, TooSmall for
/// one-point spaces.
BiLipschitzReport bilipschitz_constant(const Space& source, const Space& target,
                                       const PointMap& map, const Rational& C);

}  // namespace umq
