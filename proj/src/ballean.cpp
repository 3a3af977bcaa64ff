#include "umq/ballean.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "umq/errors.hpp"

namespace umq {

namespace {

bool canonical_ball_order(const Ball& a, const Ball& b) {
    if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
    return a.points.front() < b.points.front();  // distinct balls of one size are disjoint
}

}  // namespace

bool Ballean::contains(const std::vector<int>& points) const {
    for (const Ball& b : balls) {
        if (b.points == points) return true;
    }
    return false;
}

Ballean enumerate_ballean(const RepresentingTree& tree) {
    Ballean ballean;
    ballean.balls.reserve(tree.node_count());
    for (const auto& node : tree.nodes()) {
        ballean.balls.push_back({node.points, node.label});
    }
    std::sort(ballean.balls.begin(), ballean.balls.end(), canonical_ball_order);
    return ballean;
}

Ballean enumerate_ballean(const Space& space) {
    return enumerate_ballean(RepresentingTree::build(space));
}

IsBallResult is_ball(const Space& space, std::span<const int> subset) {
    IsBallResult result;
    if (subset.empty()) {
        result.reason = IsBallResult::Fail::EmptySubset;
        return result;
    }
    std::vector<char> inside(space.size(), 0);
    for (const int p : subset) inside[p] = 1;
    std::vector<int> members(subset.begin(), subset.end());
    std::sort(members.begin(), members.end());
    std::vector<int> outside;
    for (int z = 0; z < space.size(); ++z) {
        if (!inside[z]) outside.push_back(z);
    }
    for (const int x : members) {
        for (const int y : members) {
            for (const int z : outside) {
                if (space.value_index(x, y) >= space.value_index(x, z)) {
                    result.reason = IsBallResult::Fail::NotBelowOutside;
                    result.x = x;
                    result.y = y;
                    result.z = z;
                    return result;
                }
                if (space.value_index(x, z) != space.value_index(y, z)) {
                    result.reason = IsBallResult::Fail::OutsideUnequal;
                    result.x = x;
                    result.y = y;
                    result.z = z;
                    return result;
                }
            }
        }
    }
    result.is_ball = true;
    return result;
}

BallPreservingResult is_ball_preserving(const Space& source, const Space& target,
                                        const PointMap& map) {
    if (map.size() != source.size() || source.size() != target.size()) {
        throw Error("NotBijective", "mapping does not pair the two spaces point-for-point");
    }
    const Ballean source_balls = enumerate_ballean(source);
    const Ballean target_balls = enumerate_ballean(target);
    std::set<std::vector<int>> source_set, target_set;
    for (const Ball& b : source_balls.balls) source_set.insert(b.points);
    for (const Ball& b : target_balls.balls) target_set.insert(b.points);

    BallPreservingResult result;
    for (const Ball& b : source_balls.balls) {
        std::vector<int> image;
        image.reserve(b.points.size());
        for (const int p : b.points) image.push_back(map.forward(p));
        std::sort(image.begin(), image.end());
        if (!target_set.contains(image)) {
            result.direction = BallPreservingResult::Direction::Image;
            result.offending = b;
            return result;
        }
    }
    for (const Ball& b : target_balls.balls) {
        std::vector<int> preimage;
        preimage.reserve(b.points.size());
        for (const int p : b.points) preimage.push_back(map.inverse(p));
        std::sort(preimage.begin(), preimage.end());
        if (!source_set.contains(preimage)) {
            result.direction = BallPreservingResult::Direction::Preimage;
            result.offending = b;
            return result;
        }
    }
    result.preserving = true;
    return result;
}

// ---- rooted tree isomorphism (bottom-up canonical codes) ----------------

namespace {

using CodeKey = std::pair<std::string, std::vector<int>>;

std::vector<int> ahu_codes(const RepresentingTree& tree, bool respect_labels,
                           std::map<CodeKey, int>& intern) {
    std::vector<int> code(tree.node_count());
    // node ids are preorder positions, so descending order is a postorder
    for (int id = tree.node_count() - 1; id >= 0; --id) {
        const auto& node = tree.node(id);
        CodeKey key;
        if (respect_labels) key.first = to_string(node.label);
        key.second.reserve(node.children.size());
        for (const int c : node.children) key.second.push_back(code[c]);
        std::sort(key.second.begin(), key.second.end());
        const auto [it, inserted] = intern.emplace(key, static_cast<int>(intern.size()));
        code[id] = it->second;
    }
    return code;
}

void match_subtrees(const RepresentingTree& a, const RepresentingTree& b, int na, int nb,
                    const std::vector<int>& code_a, const std::vector<int>& code_b,
                    IsoWitness& witness) {
    witness.node_pairs.emplace_back(na, nb);
    // children grouped by code, kept in canonical child order within groups
    std::map<int, std::vector<int>> groups_a, groups_b;
    for (const int c : a.node(na).children) groups_a[code_a[c]].push_back(c);
    for (const int c : b.node(nb).children) groups_b[code_b[c]].push_back(c);
    for (const auto& [code, list_a] : groups_a) {
        const auto& list_b = groups_b.at(code);  // equal parent codes: same multiset
        for (std::size_t i = 0; i < list_a.size(); ++i) {
            match_subtrees(a, b, list_a[i], list_b[i], code_a, code_b, witness);
        }
    }
}

}  // namespace

std::optional<IsoWitness> rooted_tree_isomorphic(const RepresentingTree& a,
                                                 const RepresentingTree& b, bool respect_labels) {
    std::map<CodeKey, int> intern;
    const std::vector<int> code_a = ahu_codes(a, respect_labels, intern);
    const std::vector<int> code_b = ahu_codes(b, respect_labels, intern);
    if (code_a[a.root()] != code_b[b.root()]) {
        return std::nullopt;
    }
    IsoWitness witness;
    witness.node_pairs.reserve(a.node_count());
    match_subtrees(a, b, a.root(), b.root(), code_a, code_b, witness);
    return witness;
}

IffReport ball_preserving_iff_iso_check(const Space& X, const Space& Y) {
    if (X.size() != Y.size()) {
        throw Error("SizesDiffer", "no bijection between " + std::to_string(X.size()) + " and " +
                                       std::to_string(Y.size()) + " points");
    }
    const RepresentingTree tx = RepresentingTree::build(X);
    const RepresentingTree ty = RepresentingTree::build(Y);

    IffReport report;
    report.witness = rooted_tree_isomorphic(tx, ty);
    report.isomorphic = report.witness.has_value();

    if (report.isomorphic) {
        // leaves pair with leaves (leaf codes only match leaves); read phi off
        // the leaf pairs of the witness
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [na, nb] : report.witness->node_pairs) {
            if (tx.node(na).is_leaf()) {
                pairs.emplace_back(X.point_name(tx.node(na).leaf_point),
                                   Y.point_name(ty.node(nb).leaf_point));
            }
        }
        std::sort(pairs.begin(), pairs.end(), [&X](const auto& p, const auto& q) {
            return X.index_of(p.first) < X.index_of(q.first);
        });
        report.phi_pairs = pairs;
        const PointMap phi = PointMap::between(X, Y, pairs);
        report.phi_ball_preserving = is_ball_preserving(X, Y, phi).preserving;
        report.certificate = IffReport::Certificate::IsomorphicWitness;
        return report;
    }

    if (X.size() > 8) {
        report.certificate = IffReport::Certificate::StatementOnly;
        return report;
    }

    // exhaustive certificate: every bijection fails ball-preservation
    const Ballean bx = enumerate_ballean(tx);
    const Ballean by = enumerate_ballean(ty);
    std::set<std::vector<int>> x_set, y_set;
    for (const Ball& b : bx.balls) x_set.insert(b.points);
    for (const Ball& b : by.balls) y_set.insert(b.points);

    std::vector<int> perm(X.size());
    for (int i = 0; i < X.size(); ++i) perm[i] = i;
    do {
        ++report.bijections_checked;
        std::vector<int> inv(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
        bool preserving = true;
        for (const Ball& b : bx.balls) {
            std::vector<int> image;
            image.reserve(b.points.size());
            for (const int p : b.points) image.push_back(perm[p]);
            std::sort(image.begin(), image.end());
            if (!y_set.contains(image)) {
                preserving = false;
                break;
            }
        }
        if (preserving) {
            for (const Ball& b : by.balls) {
                std::vector<int> preimage;
                preimage.reserve(b.points.size());
                for (const int p : b.points) preimage.push_back(inv[p]);
                std::sort(preimage.begin(), preimage.end());
                if (!x_set.contains(preimage)) {
                    preserving = false;
                    break;
                }
            }
        }
        if (preserving) {
            ++report.bijections_ball_preserving;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    report.certificate = IffReport::Certificate::ExhaustiveNoBijection;
    return report;
}

}  // namespace umq
