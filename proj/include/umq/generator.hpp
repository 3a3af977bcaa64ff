#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "umq/ballean.hpp"
#include "umq/mapping.hpp"
#include "umq/modulus.hpp"
#include "umq/quasisymmetry.hpp"
#include "umq/space.hpp"

namespace umq {

/// Deterministic 64-bit generator (SplitMix64, Steele-Lea-Flood update
/// constants). Fully specified here so seeded fixtures are identical on
/// every platform; golden files pin the outputs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound) by modulo; bound must be >= 1. The
    /// modulo bias is irrelevant for fixture generation and keeps the
    /// algorithm trivially portable.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

struct GenConfig {
    std::uint64_t seed = 0;
    int n = 1;
    int max_depth = 1;
    std::vector<Rational> labels;  // distinct positive label pool
    int branch_min = 2;
    int branch_max = 4;
};

/// Draws a random monotone labeled tree shape and reads the space off it:
/// points p0..p{n-1} in leaf order, distance of a cross-child pair = label of
/// the node splitting them. Deterministic per seed; the built tree of the
/// output reproduces the drawn shape. Throws Error("InfeasibleConfig") when
/// the label pool is smaller than the requested depth (or the config is
/// otherwise unusable).
Space gen_space(const GenConfig& config);

/// Applies a strictly increasing rational step function g (given pointwise on
/// the source's positive distance values, g(0) = 0 implicit) to every
/// distance. Returns the target space and the identity pairing; the result is
/// 1-quasisymmetric by construction. Throws Error("NotIncreasing") when the
/// steps are not strictly increasing and positive, Error("FormatError") when
/// a distance value of the source is missing.
std::pair<Space, PointMap> gen_monotone_map(
    const Space& source, const std::vector<std::pair<Rational, Rational>>& steps);

/// Ball test straight from the definition: some center in the subset and some
/// radius in {0} union distance values reproduces the subset exactly. No tree
/// involved; this is the oracle the characterization check is compared to.
bool oracle_is_ball(const Space& space, std::span<const int> subset);

/// All distinct closed balls B_r(c) by direct enumeration, canonically
/// ordered. No tree involved.
Ballean oracle_ballean(const Space& space);

/// Direct quantifier form of the quasisymmetry definition: for every
/// pairwise-distinct triple and every t in the grid, d(x,a) <= t*d(x,b)
/// implies rho(fx,fa) <= eta(t)*rho(fx,fb). The grid must include all
/// envelope t values for the check to be conclusive.
bool oracle_qs_quantifier(const Space& source, const Space& target, const PointMap& map,
                          const Modulus& eta, std::span<const Rational> t_grid);

/// Smallest C >= 1 with C*t >= r over the envelope, as a linear modulus.
Modulus fit_linear_modulus(const ConstraintEnvelope& env);

/// Smallest C >= 1 with C*t^alpha >= r over the envelope, alpha >= 1 integral.
Modulus fit_power_modulus(const ConstraintEnvelope& env, long alpha);

}  // namespace umq
