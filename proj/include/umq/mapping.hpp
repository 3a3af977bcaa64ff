#pragma once

#include <string>
#include <utility>
#include <vector>

#include "umq/space.hpp"

namespace umq {

/// Bijection between the point sets of two spaces, stored as index pairings
/// in both directions. Construction validates bijectivity.
class PointMap {
public:
    /// pairs are (source point, target point) by name; every point of each
    /// space must appear exactly once. Throws SizesDiffer, UnknownPoint or
    /// NotBijective.
    static PointMap between(const Space& source, const Space& target,
                            const std::vector<std::pair<std::string, std::string>>& pairs);

    /// Index-wise identity pairing (source index i -> target index i).
    static PointMap identity(const Space& source, const Space& target);

    int size() const { return static_cast<int>(forward_.size()); }
    int forward(int source_index) const { return forward_[source_index]; }
    int inverse(int target_index) const { return inverse_[target_index]; }
    const std::vector<int>& forward_vector() const { return forward_; }
    const std::vector<int>& inverse_vector() const { return inverse_; }

    /// The pairing of f^-1 (swap source and target roles).
    PointMap inverted() const;

    /// Name pairs in source-index order.
    std::vector<std::pair<std::string, std::string>> name_pairs(const Space& source,
                                                                const Space& target) const;

private:
    friend PointMap compose(const PointMap& f, const PointMap& g);
    std::vector<int> forward_;
    std::vector<int> inverse_;
};

/// g after f: source of f to target of g. Requires f's target size to equal
/// g's source size.
PointMap compose(const PointMap& f, const PointMap& g);

}  // namespace umq
