#include "umq/json_io.hpp"

#include <fstream>

#include "umq/errors.hpp"

namespace umq {

namespace {

Rational parse_rational_at(const Json& j, const std::string& where) {
    if (!j.is_string()) {
        throw Error("FormatError", where + ": rationals are serialized as strings");
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        throw Error("FormatError", where + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* name, const std::string& what) {
    const auto it = j.find(name);
    if (it == j.end()) {
        throw Error("FormatError", what + " is missing the '" + name + "' field");
    }
    return *it;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("IoError", "cannot read '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("FormatError", "'" + path + "' is not valid JSON: " + e.what());
    }
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw Error("IoError", "cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw Error("IoError", "write to '" + path + "' failed");
    }
}

Space parse_space_json(const Json& j, MetricKind kind) {
    if (!j.is_object()) {
        throw Error("FormatError", "space JSON must be an object");
    }
    const Json& points_json = field(j, "points", "space JSON");
    const Json& matrix_json = field(j, "matrix", "space JSON");
    if (!points_json.is_array() || !matrix_json.is_array()) {
        throw Error("FormatError", "space JSON 'points' and 'matrix' must be arrays");
    }
    std::vector<std::string> points;
    for (const Json& p : points_json) {
        if (!p.is_string()) {
            throw Error("FormatError", "point identifiers must be strings");
        }
        points.push_back(p.get<std::string>());
    }
    std::vector<std::vector<Rational>> matrix;
    int row = 0;
    for (const Json& row_json : matrix_json) {
        if (!row_json.is_array()) {
            throw Error("FormatError", "matrix[" + std::to_string(row) + "] must be an array");
        }
        std::vector<Rational> values;
        int col = 0;
        for (const Json& cell : row_json) {
            values.push_back(parse_rational_at(
                cell, "matrix[" + std::to_string(row) + "][" + std::to_string(col) + "]"));
            ++col;
        }
        matrix.push_back(std::move(values));
        ++row;
    }
    return Space::validated(std::move(points), matrix, kind);
}

Json space_to_json(const Space& space) {
    Json j;
    j["points"] = space.points();
    Json matrix = Json::array();
    for (int i = 0; i < space.size(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < space.size(); ++k) {
            row.push_back(to_string(space.dist(i, k)));
        }
        matrix.push_back(std::move(row));
    }
    j["matrix"] = std::move(matrix);
    return j;
}

TreeSpec parse_tree_json(const Json& j) {
    if (!j.is_object()) {
        throw Error("FormatError", "tree node must be an object");
    }
    TreeSpec spec;
    spec.label = parse_rational_at(field(j, "label", "tree node"), "tree node label");
    const bool has_point = j.contains("point");
    const bool has_children = j.contains("children");
    if (has_point && has_children) {
        throw Error("FormatError", "tree node has both 'point' and 'children'");
    }
    if (has_point) {
        const Json& p = j.at("point");
        if (!p.is_string()) {
            throw Error("FormatError", "leaf 'point' must be a string");
        }
        spec.point = p.get<std::string>();
        return spec;
    }
    if (!has_children) {
        throw Error("FormatError", "tree node needs 'point' or 'children'");
    }
    const Json& children = j.at("children");
    if (!children.is_array()) {
        throw Error("FormatError", "'children' must be an array");
    }
    for (const Json& c : children) {
        spec.children.push_back(parse_tree_json(c));
    }
    return spec;
}

RepresentingTree tree_from_json(const Json& j) {
    return RepresentingTree::from_spec(parse_tree_json(j));
}

namespace {

Json spec_to_json(const TreeSpec& spec) {
    Json j;
    j["label"] = to_string(spec.label);
    if (spec.point.has_value()) {
        j["point"] = *spec.point;
        return j;
    }
    Json children = Json::array();
    for (const TreeSpec& c : spec.children) {
        children.push_back(spec_to_json(c));
    }
    j["children"] = std::move(children);
    return j;
}

}  // namespace

Json tree_to_json(const RepresentingTree& tree) {
    return spec_to_json(tree.to_spec());
}

std::vector<std::pair<std::string, std::string>> parse_mapping_json(const Json& j) {
    if (!j.is_object()) {
        throw Error("FormatError", "mapping JSON must be an object");
    }
    const Json& pairs_json = field(j, "pairs", "mapping JSON");
    if (!pairs_json.is_array()) {
        throw Error("FormatError", "mapping 'pairs' must be an array");
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const Json& p : pairs_json) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
            throw Error("FormatError", "each mapping pair must be [\"from\",\"to\"]");
        }
        pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return pairs;
}

Json mapping_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
    Json j;
    Json list = Json::array();
    for (const auto& [from, to] : pairs) {
        list.push_back(Json::array({from, to}));
    }
    j["pairs"] = std::move(list);
    return j;
}

Json ballean_to_json(const Space& space, const Ballean& ballean) {
    Json balls = Json::array();
    for (const Ball& b : ballean.balls) {
        Json ball;
        Json names = Json::array();
        for (const int p : b.points) {
            names.push_back(space.point_name(p));
        }
        ball["points"] = std::move(names);
        ball["diameter"] = to_string(b.diameter);
        balls.push_back(std::move(ball));
    }
    Json j;
    j["balls"] = std::move(balls);
    return j;
}

Json envelope_to_json(const ConstraintEnvelope& env) {
    Json j = Json::array();
    for (const Constraint& c : env.constraints) {
        Json entry;
        entry["t"] = to_string(c.t);
        entry["r"] = to_string(c.r);
        j.push_back(std::move(entry));
    }
    return j;
}

GenConfig parse_gen_config_json(const Json& j) {
    if (!j.is_object()) {
        throw Error("FormatError", "generator config must be an object");
    }
    GenConfig config;
    config.seed = field(j, "seed", "generator config").get<std::uint64_t>();
    config.n = field(j, "n", "generator config").get<int>();
    config.max_depth = field(j, "max_depth", "generator config").get<int>();
    for (const Json& label : field(j, "labels", "generator config")) {
        config.labels.push_back(parse_rational_at(label, "generator label"));
    }
    if (j.contains("branch_min")) config.branch_min = j.at("branch_min").get<int>();
    if (j.contains("branch_max")) config.branch_max = j.at("branch_max").get<int>();
    return config;
}

Json gen_config_to_json(const GenConfig& config) {
    Json j;
    j["seed"] = config.seed;
    j["n"] = config.n;
    j["max_depth"] = config.max_depth;
    Json labels = Json::array();
    for (const Rational& label : config.labels) {
        labels.push_back(to_string(label));
    }
    j["labels"] = std::move(labels);
    j["branch_min"] = config.branch_min;
    j["branch_max"] = config.branch_max;
    return j;
}

}  // namespace umq
