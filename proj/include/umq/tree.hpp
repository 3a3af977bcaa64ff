#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "umq/space.hpp"

namespace umq {

/// Raw nested form of a labeled rooted tree (the JSON shape): internal nodes
/// carry children, leaves carry a point identifier.
struct TreeSpec {
    Rational label;
    std::optional<std::string> point;
    std::vector<TreeSpec> children;
};

/// Labeled rooted tree whose nodes are the balls of a finite ultrametric
/// space: the root is the whole space labeled by its diameter, children are
/// the parts of the diametrical graph's multipartite decomposition, leaves
/// are single points labeled 0. Node ids are preorder positions; children are
/// ordered by the smallest point index beneath them, so equal spaces build
/// identical trees.
class RepresentingTree {
public:
    struct Node {
        Rational label;
        int parent = -1;              // -1 for the root
        std::vector<int> children;    // canonical order
        int leaf_point = -1;          // point index, leaves only
        std::vector<int> points;      // sorted point indices beneath this node
        int depth = 0;
        bool is_leaf() const { return leaf_point >= 0; }
    };

    /// Recursive construction from a validated ultrametric space. A one-point
    /// space yields a single node labeled 0 that is both root and leaf.
    static RepresentingTree build(const Space& space);

    /// Validates a nested tree against the representing-tree invariants
    /// (exactly the MalformedTree conditions), assigns point indices by first
    /// appearance, and canonicalizes child order. Throws
    /// Error("MalformedTree") naming the violated invariant.
    static RepresentingTree from_spec(const TreeSpec& spec);

    int root() const { return 0; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const Node& node(int id) const;
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<std::string>& points() const { return points_; }
    int leaf_of(int point_index) const { return leaf_of_point_[point_index]; }
    int point_index(std::string_view name) const;  // throws UnknownPoint

    int lca(int node_a, int node_b) const;

    /// d(x,y) read off the tree: 0 for x = y, otherwise the label of the
    /// lowest common ancestor of the two leaves (equal to the maximum label
    /// on the connecting path, since labels strictly decrease downward).
    Rational distance(int px, int py) const;
    Rational distance(std::string_view x, std::string_view y) const;

    /// Point indices beneath a node; a leaf returns itself.
    /// Throws Error("UnknownNode") for ids outside [0, node_count).
    const std::vector<int>& leaf_set(int node_id) const;

    int height() const;

    TreeSpec to_spec() const;

    /// Inverse of build: the space whose distances are the tree distances.
    Space to_space() const;

private:
    std::vector<std::string> points_;
    std::vector<Node> nodes_;
    std::vector<int> leaf_of_point_;
    std::unordered_map<std::string, int> point_index_;

    int add_subtree(const Space& space, std::vector<int> subset, int parent, int depth);
    void index_points();
};

/// Free-function spelling of RepresentingTree::to_space.
Space space_from_tree(const RepresentingTree& tree);

}  // namespace umq
