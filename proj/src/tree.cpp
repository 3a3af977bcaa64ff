#include "umq/tree.hpp"

#include <algorithm>

#include "umq/errors.hpp"

namespace umq {

namespace {

struct SpecCursor {
    const TreeSpec* spec;
    int min_point = -1;                // smallest assigned point index beneath
    std::vector<SpecCursor> children;  // canonical order after sorting
};

void validate_spec(const TreeSpec& node, const TreeSpec* parent,
                   std::unordered_map<std::string, int>& points,
                   std::vector<std::string>& point_order, SpecCursor& cursor) {
    if (node.label < 0) {
        throw Error("MalformedTree", "negative label " + to_string(node.label));
    }
    if (parent != nullptr && !(node.label < parent->label)) {
        throw Error("MalformedTree", "child label " + to_string(node.label) +
                                         " not smaller than parent label " +
                                         to_string(parent->label));
    }
    cursor.spec = &node;
    if (node.children.empty()) {
        if (!node.point.has_value()) {
            throw Error("MalformedTree", "leaf without a point identifier");
        }
        if (node.label != 0) {
            throw Error("MalformedTree",
                        "leaf '" + *node.point + "' labeled " + to_string(node.label) +
                            ", leaves must be labeled 0");
        }
        const auto [it, inserted] = points.emplace(*node.point, static_cast<int>(point_order.size()));
        if (!inserted) {
            throw Error("MalformedTree", "duplicate leaf point '" + *node.point + "'");
        }
        point_order.push_back(*node.point);
        cursor.min_point = it->second;
        return;
    }
    if (node.point.has_value()) {
        throw Error("MalformedTree", "internal node carries point '" + *node.point + "'");
    }
    if (node.children.size() < 2) {
        throw Error("MalformedTree", "internal node with a single child");
    }
    if (node.label <= 0) {
        throw Error("MalformedTree",
                    "internal node labeled " + to_string(node.label) + ", must be positive");
    }
    cursor.children.resize(node.children.size());
    for (std::size_t c = 0; c < node.children.size(); ++c) {
        validate_spec(node.children[c], &node, points, point_order, cursor.children[c]);
        cursor.min_point =
            cursor.min_point < 0 ? cursor.children[c].min_point
                                 : std::min(cursor.min_point, cursor.children[c].min_point);
    }
    std::stable_sort(cursor.children.begin(), cursor.children.end(),
                     [](const SpecCursor& a, const SpecCursor& b) { return a.min_point < b.min_point; });
}

}  // namespace

RepresentingTree RepresentingTree::build(const Space& space) {
    if (!space.is_ultrametric()) {
        throw Error("PreconditionNotMet", "representing trees need an ultrametric space");
    }
    RepresentingTree tree;
    tree.points_ = space.points();
    std::vector<int> all(space.size());
    for (int i = 0; i < space.size(); ++i) all[i] = i;
    tree.add_subtree(space, std::move(all), -1, 0);
    tree.index_points();
    return tree;
}

int RepresentingTree::add_subtree(const Space& space, std::vector<int> subset, int parent,
                                  int depth) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[id].parent = parent;
    nodes_[id].depth = depth;
    if (subset.size() == 1) {
        nodes_[id].label = Rational(0);
        nodes_[id].leaf_point = subset[0];
        nodes_[id].points = std::move(subset);
        return id;
    }
    nodes_[id].label = diameter(space, subset);
    const Partition parts = multipartite_parts(space, subset);
    nodes_[id].points = std::move(subset);
    for (const auto& part : parts.parts) {
        const int child = add_subtree(space, part, id, depth + 1);
        nodes_[id].children.push_back(child);
    }
    return id;
}

RepresentingTree RepresentingTree::from_spec(const TreeSpec& spec) {
    RepresentingTree tree;
    SpecCursor root_cursor;
    std::unordered_map<std::string, int> point_index;
    validate_spec(spec, nullptr, point_index, tree.points_, root_cursor);

    // emit canonical preorder
    struct Emit {
        RepresentingTree& tree;
        std::unordered_map<std::string, int>& point_index;
        int operator()(const SpecCursor& cursor, int parent, int depth) {
            const int id = static_cast<int>(tree.nodes_.size());
            tree.nodes_.emplace_back();
            tree.nodes_[id].label = cursor.spec->label;
            tree.nodes_[id].parent = parent;
            tree.nodes_[id].depth = depth;
            if (cursor.children.empty()) {
                tree.nodes_[id].leaf_point = point_index.at(*cursor.spec->point);
                tree.nodes_[id].points = {tree.nodes_[id].leaf_point};
                return id;
            }
            for (const SpecCursor& child : cursor.children) {
                const int cid = (*this)(child, id, depth + 1);
                tree.nodes_[id].children.push_back(cid);
                const auto& cpts = tree.nodes_[cid].points;
                tree.nodes_[id].points.insert(tree.nodes_[id].points.end(), cpts.begin(),
                                              cpts.end());
            }
            std::sort(tree.nodes_[id].points.begin(), tree.nodes_[id].points.end());
            return id;
        }
    };
    Emit{tree, point_index}(root_cursor, -1, 0);
    tree.index_points();
    return tree;
}

void RepresentingTree::index_points() {
    point_index_.clear();
    leaf_of_point_.assign(points_.size(), -1);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        point_index_.emplace(points_[i], static_cast<int>(i));
    }
    for (int id = 0; id < node_count(); ++id) {
        if (nodes_[id].is_leaf()) {
            leaf_of_point_[nodes_[id].leaf_point] = id;
        }
    }
}

const RepresentingTree::Node& RepresentingTree::node(int id) const {
    if (id < 0 || id >= node_count()) {
        throw Error("UnknownNode", "node id " + std::to_string(id) + " out of range");
    }
    return nodes_[id];
}

int RepresentingTree::point_index(std::string_view name) const {
    const auto it = point_index_.find(std::string(name));
    if (it == point_index_.end()) {
        throw Error("UnknownPoint", "no leaf for point '" + std::string(name) + "'");
    }
    return it->second;
}

int RepresentingTree::lca(int a, int b) const {
    while (nodes_[a].depth > nodes_[b].depth) a = nodes_[a].parent;
    while (nodes_[b].depth > nodes_[a].depth) b = nodes_[b].parent;
    while (a != b) {
        a = nodes_[a].parent;
        b = nodes_[b].parent;
    }
    return a;
}

Rational RepresentingTree::distance(int px, int py) const {
    if (px == py) return Rational(0);
    return nodes_[lca(leaf_of_point_[px], leaf_of_point_[py])].label;
}

Rational RepresentingTree::distance(std::string_view x, std::string_view y) const {
    return distance(point_index(x), point_index(y));
}

const std::vector<int>& RepresentingTree::leaf_set(int node_id) const {
    return node(node_id).points;
}

int RepresentingTree::height() const {
    int h = 0;
    for (const Node& n : nodes_) h = std::max(h, n.depth);
    return h;
}

TreeSpec RepresentingTree::to_spec() const {
    struct Emit {
        const RepresentingTree& tree;
        TreeSpec operator()(int id) const {
            const Node& n = tree.nodes_[id];
            TreeSpec spec;
            spec.label = n.label;
            if (n.is_leaf()) {
                spec.point = tree.points_[n.leaf_point];
                return spec;
            }
            spec.children.reserve(n.children.size());
            for (const int c : n.children) {
                spec.children.push_back((*this)(c));
            }
            return spec;
        }
    };
    return Emit{*this}(root());
}

Space RepresentingTree::to_space() const {
    const int n = static_cast<int>(points_.size());
    std::vector<Rational> matrix(static_cast<std::size_t>(n) * n, Rational(0));
    // cross-child pairs under a node are exactly the pairs whose LCA it is
    for (const Node& v : nodes_) {
        for (std::size_t ci = 0; ci < v.children.size(); ++ci) {
            for (std::size_t cj = ci + 1; cj < v.children.size(); ++cj) {
                for (const int p : nodes_[v.children[ci]].points) {
                    for (const int q : nodes_[v.children[cj]].points) {
                        matrix[static_cast<std::size_t>(p) * n + q] = v.label;
                        matrix[static_cast<std::size_t>(q) * n + p] = v.label;
                    }
                }
            }
        }
    }
    return Space::adopt_ultrametric(points_, std::move(matrix));
}

Space space_from_tree(const RepresentingTree& tree) {
    return tree.to_space();
}

}  // namespace umq
