#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umq/mapping.hpp"
#include "umq/space.hpp"
#include "umq/tree.hpp"

namespace umq {

/// A closed ball given by its point set and diameter (which equals its
/// smallest admissible radius in an ultrametric space).
struct Ball {
    std::vector<int> points;  // sorted
    Rational diameter;
};

/// All closed balls, canonically ordered by size then smallest point index.
/// Contains every singleton and the full point set; in a finite ultrametric
/// space the balls are exactly the leaf sets of the representing tree.
struct Ballean {
    std::vector<Ball> balls;

    bool contains(const std::vector<int>& points) const;
    int size() const { return static_cast<int>(balls.size()); }
};

Ballean enumerate_ballean(const RepresentingTree& tree);
Ballean enumerate_ballean(const Space& space);

/// Verdict of the triple characterization: a nonempty proper subset B is a
/// ball iff d(x,y) < d(x,z) = d(y,z) for all x,y in B and z outside B.
struct IsBallResult {
    enum class Fail { None, EmptySubset, NotBelowOutside, OutsideUnequal };
    bool is_ball = false;
    Fail reason = Fail::None;
    int x = -1, y = -1, z = -1;  // first violating triple in index order
};

IsBallResult is_ball(const Space& space, std::span<const int> subset);

/// Verdict of the ball-preservation check for a bijection: images of balls of
/// X are balls of Y and preimages of balls of Y are balls of X. On failure
/// carries the first offending ball in canonical order (forward direction
/// scanned first).
struct BallPreservingResult {
    enum class Direction { None, Image, Preimage };
    bool preserving = false;
    Direction direction = Direction::None;
    std::optional<Ball> offending;
};

BallPreservingResult is_ball_preserving(const Space& source, const Space& target,
                                        const PointMap& map);

/// Node pairing witnessing a rooted-tree isomorphism: pairs the roots and
/// preserves the parent/child relation in both directions.
struct IsoWitness {
    std::vector<std::pair<int, int>> node_pairs;
};

/// Decides isomorphism of two trees as unlabeled rooted trees via bottom-up
/// canonical codes (sorted multisets of child codes); labels participate only
/// when respect_labels is set.
std::optional<IsoWitness> rooted_tree_isomorphic(const RepresentingTree& a,
                                                 const RepresentingTree& b,
                                                 bool respect_labels = false);

/// Executable form of the equivalence "representing trees isomorphic as
/// rooted trees <=> a bijective ball-preserving mapping exists":
///  - isomorphic: a concrete bijection phi is built from the leaf pairing of
///    the witness and verified ball-preserving;
///  - not isomorphic and |X| <= 8: every bijection is enumerated and checked
///    to fail ball-preservation (exhaustive certificate);
///  - not isomorphic and |X| > 8: statement-only.
/// Throws Error("SizesDiffer") when no bijection can exist.
struct IffReport {
    enum class Certificate { IsomorphicWitness, ExhaustiveNoBijection, StatementOnly };
    bool isomorphic = false;
    std::optional<IsoWitness> witness;
    std::vector<std::pair<std::string, std::string>> phi_pairs;
    bool phi_ball_preserving = false;
    Certificate certificate = Certificate::StatementOnly;
    long bijections_checked = 0;
    long bijections_ball_preserving = 0;
};

IffReport ball_preserving_iff_iso_check(const Space& X, const Space& Y);

}  // namespace umq
