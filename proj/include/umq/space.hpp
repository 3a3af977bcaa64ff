#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "umq/kernels.hpp"
#include "umq/rational.hpp"

namespace umq {

enum class MetricKind {
    Ultrametric,  // strong triangle inequality d(x,y) <= max(d(x,z), d(z,y))
    PlainMetric,  // ordinary triangle inequality only
};

/// Finite metric space over named points with an exact rational distance
/// matrix. Immutable after construction; all operations are pure.
///
/// Alongside the matrix the space keeps the sorted table of distinct distance
/// values and, per cell, the index of its value in that table. Index
/// comparisons are order-isomorphic to exact rational comparisons, which keeps
/// the O(n^3) sweeps integer-only.
class Space {
public:
    /// Validates and constructs. Throws Error with code NotSymmetric,
    /// NonzeroDiagonal, ZeroOffDiagonal, NegativeDistance,
    /// StrongTriangleViolation (ultrametric mode) or TriangleViolation (plain
    /// mode), naming the first violating pair/triple in lexicographic index
    /// order. Shape problems (non-square matrix, duplicate points) throw
    /// FormatError.
    static Space validated(std::vector<std::string> points,
                           const std::vector<std::vector<Rational>>& matrix,
                           MetricKind kind = MetricKind::Ultrametric,
                           kernels::Exec exec = kernels::Exec::Parallel);

    /// Construction bypass for matrices that are ultrametric by construction
    /// (tree reconstruction, generator). flat_matrix is row-major n*n.
    static Space adopt_ultrametric(std::vector<std::string> points,
                                   std::vector<Rational> flat_matrix);

    int size() const { return n_; }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& point_name(int i) const { return points_[i]; }
    /// Throws Error("UnknownPoint") for names not in the space.
    int index_of(std::string_view name) const;
    const Rational& dist(int i, int j) const { return matrix_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational* matrix_data() const { return matrix_.data(); }
    MetricKind kind() const { return kind_; }
    bool is_ultrametric() const { return kind_ == MetricKind::Ultrametric; }

    const std::vector<Rational>& values() const { return values_; }
    int value_index(int i, int j) const { return vidx_[static_cast<std::size_t>(i) * n_ + j]; }
    const int* value_index_data() const { return vidx_.data(); }

private:
    Space() = default;
    void build_value_table();

    int n_ = 0;
    MetricKind kind_ = MetricKind::Ultrametric;
    std::vector<std::string> points_;
    std::vector<Rational> matrix_;
    std::vector<Rational> values_;
    std::vector<int> vidx_;
    std::unordered_map<std::string, int> index_;
};

/// diam of the whole space (0 for a one-point space).
Rational diameter(const Space& space);

/// Max distance over pairs in subset; 0 for singletons. Throws EmptySubset.
Rational diameter(const Space& space, std::span<const int> subset);

/// Graph on the points joining exactly the pairs at distance diam X.
struct DiametricalGraph {
    std::vector<std::pair<int, int>> edges;  // i < j, lexicographically sorted
};

/// Throws Error("TooSmall") when |X| < 2.
DiametricalGraph diametrical_graph(const Space& space);

/// Vertex classes of the diametrical graph: equivalence classes of the
/// relation d(u,v) < diam X. Parts are ordered by smallest contained index
/// and each part is sorted.
struct Partition {
    std::vector<std::vector<int>> parts;
};

/// Throws Error("TooSmall") when |X| < 2. The returned partition always has
/// k >= 2 parts, no diametrical edge inside a part, and every cross-part pair
/// diametrical.
Partition multipartite_parts(const Space& space);

/// Same decomposition restricted to a subset with respect to the subset's own
/// diameter. Requires |subset| >= 2 with positive diameter.
Partition multipartite_parts(const Space& space, std::span<const int> subset);

}  // namespace umq
