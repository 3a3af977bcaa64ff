#include "umq/space.hpp"

#include <algorithm>

#include "umq/errors.hpp"

namespace umq {

namespace {

std::string pair_text(const std::vector<std::string>& points, int i, int j) {
    return "(" + points[i] + "," + points[j] + ")";
}

}  // namespace

Space Space::validated(std::vector<std::string> points,
                       const std::vector<std::vector<Rational>>& matrix,
                       MetricKind kind, kernels::Exec exec) {
    const int n = static_cast<int>(points.size());
    if (n == 0) {
        throw Error("FormatError", "a space needs at least one point");
    }
    if (static_cast<int>(matrix.size()) != n) {
        throw Error("FormatError", "matrix has " + std::to_string(matrix.size()) +
                                       " rows for " + std::to_string(n) + " points");
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(matrix[i].size()) != n) {
            throw Error("FormatError", "matrix row " + std::to_string(i) + " has " +
                                           std::to_string(matrix[i].size()) + " entries");
        }
    }
    {
        std::unordered_map<std::string, int> seen;
        for (int i = 0; i < n; ++i) {
            if (!seen.emplace(points[i], i).second) {
                throw Error("FormatError", "duplicate point identifier '" + points[i] + "'");
            }
        }
    }

    // Pair checks, lexicographic (i,j); per cell: diagonal, sign, zero, symmetry.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational& v = matrix[i][j];
            if (i == j) {
                if (v != 0) {
                    throw Error("NonzeroDiagonal", "d(" + points[i] + "," + points[i] + ") = " +
                                                       to_string(v) + ", expected 0",
                                {i});
                }
                continue;
            }
            if (v < 0) {
                throw Error("NegativeDistance",
                            "d" + pair_text(points, i, j) + " = " + to_string(v), {i, j});
            }
            if (v == 0) {
                throw Error("ZeroOffDiagonal",
                            "d" + pair_text(points, i, j) + " = 0 for distinct points", {i, j});
            }
            if (j > i && v != matrix[j][i]) {
                throw Error("NotSymmetric",
                            "d" + pair_text(points, i, j) + " = " + to_string(v) + " but d" +
                                pair_text(points, j, i) + " = " + to_string(matrix[j][i]),
                            {i, j});
            }
        }
    }

    Space s;
    s.n_ = n;
    s.kind_ = kind;
    s.points_ = std::move(points);
    s.matrix_.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            s.matrix_.push_back(matrix[i][j]);
        }
    }
    s.build_value_table();

    long violation = -1;
    if (kind == MetricKind::Ultrametric) {
        violation = (exec == kernels::Exec::Serial)
                        ? kernels::first_strong_triangle_violation_ref(n, s.matrix_.data())
                        : kernels::first_strong_triangle_violation(n, s.vidx_.data(), exec);
    } else {
        violation = kernels::first_triangle_violation(n, s.matrix_.data(), exec);
    }
    if (violation >= 0) {
        const int i = static_cast<int>(violation / (static_cast<long>(n) * n));
        const int j = static_cast<int>((violation / n) % n);
        const int k = static_cast<int>(violation % n);
        const std::string code =
            kind == MetricKind::Ultrametric ? "StrongTriangleViolation" : "TriangleViolation";
        const std::string bound = kind == MetricKind::Ultrametric
                                      ? "max(d" + pair_text(s.points_, i, k) + ", d" +
                                            pair_text(s.points_, k, j) + ")"
                                      : "d" + pair_text(s.points_, i, k) + " + d" +
                                            pair_text(s.points_, k, j);
        throw Error(code,
                    "d" + pair_text(s.points_, i, j) + " = " + to_string(s.dist(i, j)) +
                        " exceeds " + bound,
                    {i, j, k});
    }
    return s;
}

Space Space::adopt_ultrametric(std::vector<std::string> points, std::vector<Rational> flat_matrix) {
    Space s;
    s.n_ = static_cast<int>(points.size());
    s.kind_ = MetricKind::Ultrametric;
    s.points_ = std::move(points);
    s.matrix_ = std::move(flat_matrix);
    if (s.matrix_.size() != static_cast<std::size_t>(s.n_) * s.n_) {
        throw Error("InternalError", "adopt_ultrametric: matrix size mismatch");
    }
    s.build_value_table();
    return s;
}

void Space::build_value_table() {
    values_ = matrix_;
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (n_ == 1 && values_.empty()) {
        values_.push_back(Rational(0));
    }
    vidx_.resize(matrix_.size());
    for (std::size_t c = 0; c < matrix_.size(); ++c) {
        const auto it = std::lower_bound(values_.begin(), values_.end(), matrix_[c]);
        vidx_[c] = static_cast<int>(it - values_.begin());
    }
    index_.clear();
    for (int i = 0; i < n_; ++i) {
        index_.emplace(points_[i], i);
    }
}

int Space::index_of(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        throw Error("UnknownPoint", "no point named '" + std::string(name) + "'");
    }
    return it->second;
}

Rational diameter(const Space& space) {
    return space.values().back();
}

Rational diameter(const Space& space, std::span<const int> subset) {
    if (subset.empty()) {
        throw Error("EmptySubset", "diameter of the empty subset is undefined");
    }
    int best = 0;
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            best = std::max(best, space.value_index(subset[a], subset[b]));
        }
    }
    return space.values()[best];
}

DiametricalGraph diametrical_graph(const Space& space) {
    const int n = space.size();
    if (n < 2) {
        throw Error("TooSmall", "diametrical graph needs at least 2 points");
    }
    const int dmax = static_cast<int>(space.values().size()) - 1;
    DiametricalGraph g;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (space.value_index(i, j) == dmax) {
                g.edges.emplace_back(i, j);
            }
        }
    }
    return g;
}

Partition multipartite_parts(const Space& space, std::span<const int> subset) {
    if (subset.size() < 2) {
        throw Error("TooSmall", "multipartite decomposition needs at least 2 points");
    }
    // diameter as a value index; comparisons stay integer
    int dmax = 0;
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            dmax = std::max(dmax, space.value_index(subset[a], subset[b]));
        }
    }
    Partition partition;
    std::vector<int> reps;
    for (const int u : subset) {
        int match = -1;
        for (std::size_t p = 0; p < reps.size(); ++p) {
            if (space.value_index(u, reps[p]) < dmax) {
                if (match >= 0) {
                    // two reps below diameter from u would join distinct parts
                    throw Error("InternalError",
                                "relation d(u,v) < diam is not transitive; space is not a "
                                "validated ultrametric");
                }
                match = static_cast<int>(p);
            }
        }
        if (match >= 0) {
            partition.parts[match].push_back(u);
        } else {
            reps.push_back(u);
            partition.parts.push_back({u});
        }
    }
    for (auto& part : partition.parts) {
        std::sort(part.begin(), part.end());
    }
    // parts were created in order of first member, i.e. by smallest index
    return partition;
}

Partition multipartite_parts(const Space& space) {
    if (space.size() < 2) {
        throw Error("TooSmall", "multipartite decomposition needs at least 2 points");
    }
    std::vector<int> all(space.size());
    for (int i = 0; i < space.size(); ++i) all[i] = i;
    return multipartite_parts(space, all);
}

}  // namespace umq
