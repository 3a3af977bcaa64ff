#include "umq/generator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "umq/errors.hpp"

namespace umq {

namespace {

struct ShapeNode {
    int count = 0;  // leaves beneath
    int internal_height = 0;
    std::vector<ShapeNode> children;
    Rational label;
};

ShapeNode build_shape(SplitMix64& rng, int count, int depth, const GenConfig& cfg) {
    ShapeNode node;
    node.count = count;
    if (count == 1) {
        return node;
    }
    int k;
    if (depth + 1 == cfg.max_depth) {
        k = count;  // children must all be leaves at the depth cap
    } else {
        const int hi = std::min(cfg.branch_max, count);
        const int lo = std::min(std::max(2, cfg.branch_min), hi);
        k = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    // random composition of count into k positive parts: k-1 distinct cuts
    std::vector<int> pool(count - 1);
    for (int i = 0; i < count - 1; ++i) pool[i] = i + 1;
    for (int i = 0; i < k - 1; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(pool.size() - i)));
        std::swap(pool[i], pool[j]);
    }
    std::vector<int> cuts(pool.begin(), pool.begin() + (k - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(count);
    int prev = 0;
    for (const int cut : cuts) {
        node.children.push_back(build_shape(rng, cut - prev, depth + 1, cfg));
        prev = cut;
    }
    for (const ShapeNode& c : node.children) {
        node.internal_height = std::max(node.internal_height, c.internal_height);
    }
    node.internal_height += 1;
    return node;
}

void assign_labels(SplitMix64& rng, ShapeNode& node, int parent_index,
                   const std::vector<Rational>& pool_desc) {
    if (node.count == 1) {
        node.label = Rational(0);
        return;
    }
    const int lo = parent_index + 1;
    const int hi = static_cast<int>(pool_desc.size()) - node.internal_height;
    const int idx = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    node.label = pool_desc[idx];
    for (ShapeNode& c : node.children) {
        assign_labels(rng, c, idx, pool_desc);
    }
}

// assigns leaf index ranges in DFS order and fills cross-child distances
void fill_matrix(const ShapeNode& node, int first_leaf, std::vector<Rational>& matrix, int n) {
    if (node.count == 1) return;
    int offset = first_leaf;
    std::vector<std::pair<int, int>> ranges;
    for (const ShapeNode& c : node.children) {
        ranges.emplace_back(offset, offset + c.count);
        fill_matrix(c, offset, matrix, n);
        offset += c.count;
    }
    for (std::size_t ci = 0; ci < ranges.size(); ++ci) {
        for (std::size_t cj = ci + 1; cj < ranges.size(); ++cj) {
            for (int p = ranges[ci].first; p < ranges[ci].second; ++p) {
                for (int q = ranges[cj].first; q < ranges[cj].second; ++q) {
                    matrix[static_cast<std::size_t>(p) * n + q] = node.label;
                    matrix[static_cast<std::size_t>(q) * n + p] = node.label;
                }
            }
        }
    }
}

}  // namespace

Space gen_space(const GenConfig& config) {
    if (config.n < 1) {
        throw Error("InfeasibleConfig", "n must be >= 1");
    }
    if (config.branch_min < 2 || config.branch_max < config.branch_min) {
        throw Error("InfeasibleConfig", "branching bounds must satisfy 2 <= min <= max");
    }
    std::vector<std::string> points;
    points.reserve(config.n);
    for (int i = 0; i < config.n; ++i) points.push_back("p" + std::to_string(i));
    if (config.n == 1) {
        return Space::adopt_ultrametric(std::move(points), {Rational(0)});
    }
    if (config.max_depth < 1) {
        throw Error("InfeasibleConfig", "n >= 2 needs max_depth >= 1");
    }
    std::vector<Rational> pool = config.labels;
    std::sort(pool.begin(), pool.end(), std::greater<Rational>());
    if (std::adjacent_find(pool.begin(), pool.end()) != pool.end()) {
        throw Error("InfeasibleConfig", "label pool has duplicates");
    }
    if (!pool.empty() && pool.back() <= 0) {
        throw Error("InfeasibleConfig", "labels must be positive");
    }
    if (static_cast<int>(pool.size()) < config.max_depth) {
        throw Error("InfeasibleConfig",
                    "label pool of size " + std::to_string(pool.size()) +
                        " too small for requested depth " + std::to_string(config.max_depth));
    }

    SplitMix64 rng(config.seed);
    ShapeNode root = build_shape(rng, config.n, 0, config);
    assign_labels(rng, root, -1, pool);

    std::vector<Rational> matrix(static_cast<std::size_t>(config.n) * config.n, Rational(0));
    fill_matrix(root, 0, matrix, config.n);
    return Space::adopt_ultrametric(std::move(points), std::move(matrix));
}

std::pair<Space, PointMap> gen_monotone_map(
    const Space& source, const std::vector<std::pair<Rational, Rational>>& steps) {
    std::vector<std::pair<Rational, Rational>> sorted = steps;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].first <= 0) {
            throw Error("NotIncreasing", "step input " + to_string(sorted[i].first) +
                                             " must be positive (g(0)=0 is implicit)");
        }
        if (sorted[i].second <= 0) {
            throw Error("NotIncreasing",
                        "step output " + to_string(sorted[i].second) + " must be positive");
        }
        if (i > 0) {
            if (sorted[i].first == sorted[i - 1].first) {
                throw Error("FormatError",
                            "duplicate step input " + to_string(sorted[i].first));
            }
            if (!(sorted[i].second > sorted[i - 1].second)) {
                throw Error("NotIncreasing", "g(" + to_string(sorted[i].first) + ") = " +
                                                 to_string(sorted[i].second) +
                                                 " does not exceed g(" +
                                                 to_string(sorted[i - 1].first) + ") = " +
                                                 to_string(sorted[i - 1].second));
            }
        }
    }
    std::map<Rational, Rational> g;
    for (const auto& [in, out] : sorted) g.emplace(in, out);

    const int n = source.size();
    std::vector<Rational> matrix(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto it = g.find(source.dist(i, j));
            if (it == g.end()) {
                throw Error("FormatError",
                            "g is undefined at distance value " + to_string(source.dist(i, j)));
            }
            matrix[static_cast<std::size_t>(i) * n + j] = it->second;
        }
    }
    // a strictly increasing g with g(0)=0 preserves max-comparisons, so the
    // image matrix is ultrametric
    Space target = Space::adopt_ultrametric(source.points(), std::move(matrix));
    PointMap identity = PointMap::identity(source, target);
    return {std::move(target), std::move(identity)};
}

bool oracle_is_ball(const Space& space, std::span<const int> subset) {
    if (subset.empty()) return false;
    std::vector<int> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    const int value_count = static_cast<int>(space.values().size());
    std::vector<int> candidate;
    for (const int c : sorted) {
        for (int r_idx = 0; r_idx < value_count; ++r_idx) {
            candidate.clear();
            for (int x = 0; x < space.size(); ++x) {
                if (space.value_index(x, c) <= r_idx) candidate.push_back(x);
            }
            if (candidate == sorted) return true;
        }
    }
    return false;
}

Ballean oracle_ballean(const Space& space) {
    std::set<std::vector<int>> seen;
    const int value_count = static_cast<int>(space.values().size());
    std::vector<int> candidate;
    for (int c = 0; c < space.size(); ++c) {
        for (int r_idx = 0; r_idx < value_count; ++r_idx) {
            candidate.clear();
            for (int x = 0; x < space.size(); ++x) {
                if (space.value_index(x, c) <= r_idx) candidate.push_back(x);
            }
            seen.insert(candidate);
        }
    }
    Ballean ballean;
    for (const auto& pts : seen) {
        ballean.balls.push_back({pts, diameter(space, pts)});
    }
    std::sort(ballean.balls.begin(), ballean.balls.end(), [](const Ball& a, const Ball& b) {
        if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
        return a.points.front() < b.points.front();
    });
    return ballean;
}

bool oracle_qs_quantifier(const Space& source, const Space& target, const PointMap& map,
                          const Modulus& eta, std::span<const Rational> t_grid) {
    const int n = source.size();
    for (int x = 0; x < n; ++x) {
        for (int a = 0; a < n; ++a) {
            if (a == x) continue;
            for (int b = 0; b < n; ++b) {
                if (b == x || b == a) continue;
                const Rational& dxa = source.dist(x, a);
                const Rational& dxb = source.dist(x, b);
                const Rational ratio = target.dist(map.forward(x), map.forward(a)) /
                                       target.dist(map.forward(x), map.forward(b));
                for (const Rational& t : t_grid) {
                    if (dxa <= t * dxb && eta.compare(t, ratio) < 0) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

Modulus fit_linear_modulus(const ConstraintEnvelope& env) {
    Rational c(1);
    for (const Constraint& constraint : env.constraints) {
        c = std::max(c, Rational(constraint.r / constraint.t));
    }
    return Modulus::linear(c);
}

Modulus fit_power_modulus(const ConstraintEnvelope& env, long alpha) {
    if (alpha < 1) {
        throw Error("InternalError", "fit_power_modulus needs alpha >= 1");
    }
    Rational c(1);
    for (const Constraint& constraint : env.constraints) {
        c = std::max(c, Rational(constraint.r / rational_pow(constraint.t, alpha)));
    }
    return Modulus::power(Rational(alpha), c);
}

}  // namespace umq
