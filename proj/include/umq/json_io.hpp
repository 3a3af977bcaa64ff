#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "umq/ballean.hpp"
#include "umq/generator.hpp"
#include "umq/quasisymmetry.hpp"
#include "umq/space.hpp"
#include "umq/tree.hpp"

namespace umq {

/// Insertion-ordered JSON keeps report fields in a stable order, so identical
/// inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; throws Error("IoError") when the file cannot
/// be read and Error("FormatError") on malformed JSON.
Json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

/// {"points": [...], "matrix": [["0","1",...], ...]} with canonical rational
/// strings. Validation runs after parsing; parse errors and non-canonical
/// rationals throw FormatError naming the offending cell.
Space parse_space_json(const Json& j, MetricKind kind = MetricKind::Ultrametric);
Json space_to_json(const Space& space);

/// Nested tree form: internal {"label":"3","children":[...]}, leaf
/// {"label":"0","point":"p0"}. The parser accepts children in any order and
/// canonicalizes.
TreeSpec parse_tree_json(const Json& j);
RepresentingTree tree_from_json(const Json& j);
Json tree_to_json(const RepresentingTree& tree);

/// {"pairs": [["p0","q0"], ...]} covering every point exactly once.
std::vector<std::pair<std::string, std::string>> parse_mapping_json(const Json& j);
Json mapping_to_json(const std::vector<std::pair<std::string, std::string>>& pairs);

Json ballean_to_json(const Space& space, const Ballean& ballean);

Json envelope_to_json(const ConstraintEnvelope& env);

/// {"seed":7,"n":6,"max_depth":3,"labels":["3","1"],"branch_min":2,
///  "branch_max":4}; labels as rational strings.
GenConfig parse_gen_config_json(const Json& j);
Json gen_config_to_json(const GenConfig& config);

}  // namespace umq
