// umq: finite ultrametric spaces, representing trees, balleans and
// quasisymmetric mappings, with exact rational arithmetic throughout.
//
// Every subcommand prints one JSON report to stdout. Exit codes: 0 pass,
// 1 a check failed (invalid space, inadmissible modulus, violated bound,
// non-isomorphic trees, ...), 2 usage/IO/format errors.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umq/ballean.hpp"
#include "umq/errors.hpp"
#include "umq/generator.hpp"
#include "umq/json_io.hpp"
#include "umq/mapping.hpp"
#include "umq/modulus.hpp"
#include "umq/quasisymmetry.hpp"
#include "umq/space.hpp"
#include "umq/tree.hpp"
#include "umq/version.hpp"

namespace {

using umq::Json;

struct Options {
    bool pretty = false;
    std::string out_path;
};

std::string resolve_input(const std::string& path) {
    if (std::filesystem::exists(path)) return path;
    if (const char* dir = std::getenv("UMQ_FIXTURE_DIR")) {
        const std::filesystem::path candidate = std::filesystem::path(dir) / path;
        if (std::filesystem::exists(candidate)) return candidate.string();
    }
    return path;
}

Json error_json(const umq::Error& e) {
    Json j;
    j["code"] = e.code();
    j["message"] = e.what();
    if (!e.indices().empty()) {
        j["indices"] = e.indices();
    }
    return j;
}

class Report {
public:
    Report(std::string command, const Options& options)
        : options_(options), start_(std::chrono::steady_clock::now()) {
        body_["command"] = std::move(command);
        body_["version"] = umq::kVersion;
        body_["verdict"] = "pass";
    }

    Json& body() { return body_; }
    void set_verdict(const char* verdict) { body_["verdict"] = verdict; }

    int finish(int exit_code, const Json* artifact = nullptr) {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        body_["timing_ms"] =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
        if (artifact != nullptr && !options_.out_path.empty()) {
            umq::save_text_file(options_.out_path, artifact->dump(2) + "\n");
        }
        std::cout << (options_.pretty ? body_.dump(2) : body_.dump()) << "\n";
        return exit_code;
    }

private:
    Options options_;
    Json body_;
    std::chrono::steady_clock::time_point start_;
};

umq::Space load_space(const std::string& path,
                      umq::MetricKind kind = umq::MetricKind::Ultrametric) {
    return umq::parse_space_json(umq::load_json_file(resolve_input(path)), kind);
}

umq::RepresentingTree load_tree(const std::string& path) {
    return umq::tree_from_json(umq::load_json_file(resolve_input(path)));
}

umq::PointMap load_map(const std::string& path, const umq::Space& source,
                       const umq::Space& target) {
    return umq::PointMap::between(
        source, target, umq::parse_mapping_json(umq::load_json_file(resolve_input(path))));
}

std::vector<int> parse_point_list(const umq::Space& space, const std::string& csv) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const auto comma = csv.find(',', pos);
        const std::string name =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!name.empty()) out.push_back(space.index_of(name));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Json triple_json(const umq::Space& space, int x, int a, int b) {
    return Json::array({space.point_name(x), space.point_name(a), space.point_name(b)});
}

Json bounds_json(const umq::Space& space, const std::vector<int>& A, const std::vector<int>& B,
                 const umq::DiameterBoundsReport& r) {
    Json j;
    Json a_names = Json::array(), b_names = Json::array();
    for (const int p : A) a_names.push_back(space.point_name(p));
    for (const int p : B) b_names.push_back(space.point_name(p));
    j["A"] = std::move(a_names);
    j["B"] = std::move(b_names);
    j["diam_A"] = umq::to_string(r.diam_A);
    j["diam_B"] = umq::to_string(r.diam_B);
    j["diam_fA"] = umq::to_string(r.diam_fA);
    j["diam_fB"] = umq::to_string(r.diam_fB);
    j["ratio"] = umq::to_string(r.ratio);
    j["sharp_lower"] = r.sharp_lower ? Json(umq::to_string(*r.sharp_lower)) : Json(nullptr);
    j["sharp_upper"] = r.sharp_upper ? Json(umq::to_string(*r.sharp_upper)) : Json(nullptr);
    j["ref_lower"] = r.ref_lower ? Json(umq::to_string(*r.ref_lower)) : Json(nullptr);
    j["ref_upper"] = r.ref_upper ? Json(umq::to_string(*r.ref_upper)) : Json(nullptr);
    j["sharp_lower_ok"] = r.sharp_lower_ok;
    j["sharp_upper_ok"] = r.sharp_upper_ok;
    j["ref_lower_ok"] = r.ref_lower_ok;
    j["ref_upper_ok"] = r.ref_upper_ok;
    j["sharp_within_ref"] = r.sharp_within_ref;
    j["slack_lower"] = r.slack_lower ? Json(umq::to_string(*r.slack_lower)) : Json(nullptr);
    j["slack_upper"] = r.slack_upper ? Json(umq::to_string(*r.slack_upper)) : Json(nullptr);
    return j;
}

// ---- subcommand bodies --------------------------------------------------

int cmd_validate(const std::string& space_path, bool metric, const Options& options) {
    Report report("validate", options);
    try {
        const umq::Space space = load_space(
            space_path, metric ? umq::MetricKind::PlainMetric : umq::MetricKind::Ultrametric);
        report.body()["points"] = space.size();
        report.body()["diameter"] = umq::to_string(umq::diameter(space));
        return report.finish(0);
    } catch (const umq::Error& e) {
        const bool format_error = e.code() == "FormatError" || e.code() == "IoError";
        report.set_verdict(format_error ? "error" : "fail");
        report.body()["violation"] = error_json(e);
        return report.finish(format_error ? 2 : 1);
    }
}

int cmd_tree(const std::string& space_path, const Options& options) {
    Report report("tree", options);
    const umq::Space space = load_space(space_path);
    const umq::RepresentingTree tree = umq::RepresentingTree::build(space);
    const Json artifact = umq::tree_to_json(tree);
    report.body()["nodes"] = tree.node_count();
    report.body()["height"] = tree.height();
    report.body()["tree"] = artifact;
    return report.finish(0, &artifact);
}

int cmd_balls(const std::string& space_path, const Options& options) {
    Report report("balls", options);
    const umq::Space space = load_space(space_path);
    const umq::Ballean ballean = umq::enumerate_ballean(space);
    const Json artifact = umq::ballean_to_json(space, ballean);
    report.body()["count"] = ballean.size();
    report.body()["ballean"] = artifact;
    return report.finish(0, &artifact);
}

int cmd_envelope(const std::string& x_path, const std::string& y_path,
                 const std::string& map_path, const Options& options) {
    Report report("envelope", options);
    const umq::Space X = load_space(x_path);
    const umq::Space Y = load_space(y_path);
    const umq::PointMap f = load_map(map_path, X, Y);
    const umq::ConstraintEnvelope env = umq::envelope(X, Y, f);
    const Json artifact = umq::envelope_to_json(env);
    report.body()["constraints"] = artifact;
    return report.finish(0, &artifact);
}

int cmd_check(const std::string& x_path, const std::string& y_path, const std::string& map_path,
              const std::string& eta_spec, bool one_qs, const std::string& bilipschitz_c,
              bool metric_target, const Options& options) {
    Report report("check", options);
    const umq::Space X = load_space(x_path);
    const umq::Space Y = load_space(
        y_path, metric_target ? umq::MetricKind::PlainMetric : umq::MetricKind::Ultrametric);
    const umq::PointMap f = load_map(map_path, X, Y);
    bool pass = true;

    if (!eta_spec.empty()) {
        const umq::Modulus eta = umq::Modulus::parse(eta_spec);
        const umq::ConstraintEnvelope env = umq::envelope(X, Y, f);
        const umq::ModulusCheckResult result = umq::check_modulus(env, eta);
        report.body()["eta"] = eta.to_string();
        report.body()["admissible"] = result.admissible;
        if (!result.admissible) {
            pass = false;
            Json witness;
            witness["t"] = umq::to_string(result.witness->t);
            witness["r"] = umq::to_string(result.witness->r);
            report.body()["witness"] = std::move(witness);
        }
    }

    if (one_qs) {
        const umq::OneQsResult qs = umq::is_one_qs(X, Y, f);
        report.body()["one_qs"] = qs.one_qs;
        if (!qs.one_qs) {
            pass = false;
            report.body()["one_qs_witness"] = triple_json(X, qs.witness->x, qs.witness->a,
                                                          qs.witness->b);
        }
        const umq::ImageUltrametricResult image = umq::image_ultrametric_check(X, Y, f);
        report.body()["image_ultrametric"] = image.ultrametric;
        if (!image.ultrametric) {
            pass = false;
            report.body()["image_witness"] =
                triple_json(Y, (*image.witness)[0], (*image.witness)[1], (*image.witness)[2]);
        }
        if (qs.one_qs && X.is_ultrametric() && Y.is_ultrametric()) {
            const umq::RemarkResult remark = umq::remark_equivalences_check(X, Y, f);
            report.body()["remark_equivalences"] = remark.holds;
            if (!remark.holds) {
                pass = false;
                report.body()["remark_witness"] = triple_json(X, remark.witness->x,
                                                              remark.witness->a,
                                                              remark.witness->b);
            }
        }
    }

    if (!bilipschitz_c.empty()) {
        const umq::BiLipschitzReport bl =
            umq::bilipschitz_constant(X, Y, f, umq::parse_rational(bilipschitz_c));
        report.body()["L"] = umq::to_string(bl.L);
        report.body()["bilipschitz_verified"] = bl.verified;
        report.body()["upper_tight_everywhere"] = bl.upper_tight_everywhere;
        if (!bl.verified) {
            pass = false;
            report.body()["bilipschitz_witness"] =
                Json::array({X.point_name(bl.witness_x), X.point_name(bl.witness_y)});
        }
    }

    if (!pass) report.set_verdict("fail");
    return report.finish(pass ? 0 : 1);
}

int cmd_bounds(const std::string& x_path, const std::string& y_path, const std::string& map_path,
               const std::string& eta_spec, bool all_nested, bool exhaustive_subsets,
               const std::string& a_csv, const std::string& b_csv, const std::string& pointwise,
               const Options& options) {
    Report report("bounds", options);
    const umq::Space X = load_space(x_path);
    const umq::Space Y = load_space(y_path);
    const umq::PointMap f = load_map(map_path, X, Y);
    const umq::Modulus eta = umq::Modulus::parse(eta_spec);
    const umq::ConstraintEnvelope env = umq::envelope(X, Y, f);
    report.body()["eta"] = eta.to_string();
    bool pass = true;

    if (!pointwise.empty()) {
        const std::vector<int> pts = parse_point_list(X, pointwise);
        if (pts.size() != 2) {
            throw umq::Error("FormatError", "--pointwise expects two point names");
        }
        const umq::PointwiseBoundsReport r =
            umq::pointwise_bounds(X, Y, f, eta, pts[0], pts[1], &env);
        Json j;
        j["x"] = X.point_name(pts[0]);
        j["y"] = X.point_name(pts[1]);
        j["distance"] = umq::to_string(r.distance);
        j["rho"] = umq::to_string(r.rho);
        j["lower"] = r.lower ? Json(umq::to_string(*r.lower)) : Json(nullptr);
        j["upper"] = r.upper ? Json(umq::to_string(*r.upper)) : Json(nullptr);
        j["lower_ok"] = r.lower_ok;
        j["upper_ok"] = r.upper_ok;
        report.body()["pointwise"] = std::move(j);
        pass = pass && r.lower_ok && r.upper_ok;
    } else if (all_nested || exhaustive_subsets) {
        Json reports = Json::array();
        long pairs = 0, failures = 0;
        const auto run_pair = [&](const std::vector<int>& A, const std::vector<int>& B) {
            const umq::DiameterBoundsReport r = umq::verify_diameter_bounds(X, Y, f, eta, A, B, &env);
            ++pairs;
            const bool ok = r.sharp_lower_ok && r.sharp_upper_ok && r.ref_lower_ok &&
                            r.ref_upper_ok && r.sharp_within_ref;
            if (!ok) ++failures;
            reports.push_back(bounds_json(X, A, B, r));
        };
        if (exhaustive_subsets) {
            if (X.size() > 8) {
                throw umq::Error("FormatError", "--exhaustive-subsets is limited to |X| <= 8");
            }
            const int n = X.size();
            for (unsigned b_mask = 1; b_mask < (1u << n); ++b_mask) {
                std::vector<int> B;
                for (int i = 0; i < n; ++i) {
                    if (b_mask & (1u << i)) B.push_back(i);
                }
                // proper nonempty sub-masks of b_mask plus b_mask itself
                for (unsigned a_mask = b_mask;; a_mask = (a_mask - 1) & b_mask) {
                    if (a_mask != 0) {
                        std::vector<int> A;
                        for (int i = 0; i < n; ++i) {
                            if (a_mask & (1u << i)) A.push_back(i);
                        }
                        if (umq::diameter(X, A) > 0) run_pair(A, B);
                    }
                    if (a_mask == 0) break;
                }
            }
        } else {
            const umq::Ballean ballean = umq::enumerate_ballean(X);
            for (const umq::Ball& a : ballean.balls) {
                if (a.diameter == 0) continue;
                for (const umq::Ball& b : ballean.balls) {
                    if (b.points.size() < a.points.size()) continue;
                    if (std::includes(b.points.begin(), b.points.end(), a.points.begin(),
                                      a.points.end())) {
                        run_pair(a.points, b.points);
                    }
                }
            }
        }
        report.body()["pairs"] = pairs;
        report.body()["failures"] = failures;
        report.body()["reports"] = std::move(reports);
        pass = pass && failures == 0;
    } else {
        const std::vector<int> A = parse_point_list(X, a_csv);
        const std::vector<int> B = parse_point_list(X, b_csv);
        const umq::DiameterBoundsReport r = umq::verify_diameter_bounds(X, Y, f, eta, A, B, &env);
        report.body()["report"] = bounds_json(X, A, B, r);
        pass = r.sharp_lower_ok && r.sharp_upper_ok && r.ref_lower_ok && r.ref_upper_ok &&
               r.sharp_within_ref;
    }

    if (!pass) report.set_verdict("fail");
    return report.finish(pass ? 0 : 1);
}

int cmd_iso(const std::string& tree_a_path, const std::string& tree_b_path, bool respect_labels,
            const Options& options) {
    Report report("iso", options);
    const umq::RepresentingTree a = load_tree(tree_a_path);
    const umq::RepresentingTree b = load_tree(tree_b_path);
    const std::optional<umq::IsoWitness> witness =
        umq::rooted_tree_isomorphic(a, b, respect_labels);
    report.body()["respect_labels"] = respect_labels;
    report.body()["isomorphic"] = witness.has_value();
    if (witness.has_value()) {
        Json pairs = Json::array();
        for (const auto& [na, nb] : witness->node_pairs) {
            pairs.push_back(Json::array({na, nb}));
        }
        Json artifact;
        artifact["node_pairs"] = std::move(pairs);
        report.body()["witness"] = artifact;
        return report.finish(0, &artifact);
    }
    report.set_verdict("fail");
    report.body()["detail"] = "canonical codes differ";
    return report.finish(1);
}

int cmd_ball_preserving(const std::string& x_path, const std::string& y_path,
                        const std::string& map_path, const Options& options) {
    Report report("ball-preserving", options);
    const umq::Space X = load_space(x_path);
    const umq::Space Y = load_space(y_path);

    if (!map_path.empty()) {
        const umq::PointMap f = load_map(map_path, X, Y);
        const umq::BallPreservingResult r = umq::is_ball_preserving(X, Y, f);
        report.body()["ball_preserving"] = r.preserving;
        if (!r.preserving) {
            Json witness;
            witness["direction"] =
                r.direction == umq::BallPreservingResult::Direction::Image ? "image" : "preimage";
            const umq::Space& side =
                r.direction == umq::BallPreservingResult::Direction::Image ? X : Y;
            Json pts = Json::array();
            for (const int p : r.offending->points) pts.push_back(side.point_name(p));
            witness["ball"] = std::move(pts);
            report.body()["witness"] = std::move(witness);
            report.set_verdict("fail");
            return report.finish(1);
        }
        return report.finish(0);
    }

    const umq::IffReport r = umq::ball_preserving_iff_iso_check(X, Y);
    report.body()["isomorphic"] = r.isomorphic;
    switch (r.certificate) {
        case umq::IffReport::Certificate::IsomorphicWitness: {
            Json phi = Json::array();
            for (const auto& [from, to] : r.phi_pairs) {
                phi.push_back(Json::array({from, to}));
            }
            report.body()["phi"] = std::move(phi);
            report.body()["phi_ball_preserving"] = r.phi_ball_preserving;
            return report.finish(r.phi_ball_preserving ? 0 : 1);
        }
        case umq::IffReport::Certificate::ExhaustiveNoBijection:
            report.body()["certificate"] = "exhaustive";
            report.body()["bijections_checked"] = r.bijections_checked;
            report.body()["bijections_ball_preserving"] = r.bijections_ball_preserving;
            report.set_verdict("fail");
            return report.finish(1);
        case umq::IffReport::Certificate::StatementOnly:
            report.body()["certificate"] = "statement-only";
            report.set_verdict("fail");
            return report.finish(1);
    }
    return report.finish(2);
}

int cmd_gen(const std::string& config_path, std::uint64_t seed, int n, int depth,
            const std::string& labels_csv, int branch_min, int branch_max,
            const std::string& steps_spec, const std::string& target_out,
            const std::string& map_out, const Options& options) {
    Report report("gen", options);
    umq::GenConfig config;
    if (!config_path.empty()) {
        config = umq::parse_gen_config_json(umq::load_json_file(resolve_input(config_path)));
    } else {
        config.seed = seed;
        config.n = n;
        config.max_depth = depth;
        config.branch_min = branch_min;
        config.branch_max = branch_max;
        if (labels_csv.empty()) {
            for (int i = depth; i >= 1; --i) config.labels.emplace_back(i);
        } else {
            std::size_t pos = 0;
            while (pos <= labels_csv.size()) {
                const auto comma = labels_csv.find(',', pos);
                config.labels.push_back(umq::parse_rational(labels_csv.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
    }
    const umq::Space space = umq::gen_space(config);
    const Json artifact = umq::space_to_json(space);
    report.body()["config"] = umq::gen_config_to_json(config);
    report.body()["space"] = artifact;

    if (!steps_spec.empty()) {
        // "1:2;3:9" applies g(1)=2, g(3)=9
        std::vector<std::pair<umq::Rational, umq::Rational>> steps;
        std::size_t pos = 0;
        while (pos <= steps_spec.size()) {
            const auto semi = steps_spec.find(';', pos);
            const std::string item = steps_spec.substr(
                pos, semi == std::string::npos ? std::string::npos : semi - pos);
            const auto colon = item.find(':');
            if (colon == std::string::npos) {
                throw umq::Error("FormatError", "--apply-steps expects d:v pairs joined by ';'");
            }
            steps.emplace_back(umq::parse_rational(item.substr(0, colon)),
                               umq::parse_rational(item.substr(colon + 1)));
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        const auto [target, map] = umq::gen_monotone_map(space, steps);
        report.body()["target"] = umq::space_to_json(target);
        report.body()["map"] = umq::mapping_to_json(map.name_pairs(space, target));
        if (!target_out.empty()) {
            umq::save_text_file(target_out, umq::space_to_json(target).dump(2) + "\n");
        }
        if (!map_out.empty()) {
            umq::save_text_file(map_out,
                                umq::mapping_to_json(map.name_pairs(space, target)).dump(2) + "\n");
        }
    }
    return report.finish(0, &artifact);
}

int cmd_inverse_eta(const std::string& eta_spec, const std::string& apply_at,
                    const Options& options) {
    Report report("inverse-eta", options);
    const umq::Modulus eta = umq::Modulus::parse(eta_spec);
    const umq::Modulus dual = eta.inverse_modulus();
    report.body()["eta"] = eta.to_string();
    report.body()["inverse"] = dual.to_string();
    if (!apply_at.empty()) {
        const umq::Rational t = umq::parse_rational(apply_at);
        const auto value = dual.evaluate(t);
        report.body()["at"] = umq::to_string(t);
        report.body()["value"] = value ? Json(umq::to_string(*value)) : Json(nullptr);
    }
    return report.finish(0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite ultrametric spaces, representing trees and quasisymmetric mappings"};
    app.set_version_flag("--version", umq::kVersion);
    app.require_subcommand(1);

    Options options;
    app.add_flag("--pretty", options.pretty, "indent the report JSON");
    app.add_option("--out", options.out_path, "write the command's artifact JSON to a file");

    std::string space_path, x_path, y_path, map_path, tree_a, tree_b;
    std::string eta_spec, bilipschitz_c, a_csv, b_csv, pointwise;
    bool metric = false, one_qs = false, metric_target = false;
    bool all_nested = false, exhaustive_subsets = false, respect_labels = false;

    auto* validate = app.add_subcommand("validate", "validate a space file");
    validate->add_option("space", space_path)->required();
    validate->add_flag("--metric", metric, "plain-metric validation (triangle inequality only)");

    auto* tree = app.add_subcommand("tree", "build the representing tree");
    tree->add_option("space", space_path)->required();

    auto* balls = app.add_subcommand("balls", "enumerate the ballean");
    balls->add_option("space", space_path)->required();

    auto* envelope_cmd = app.add_subcommand("envelope", "constraint envelope of a mapping");
    envelope_cmd->add_option("source", x_path)->required();
    envelope_cmd->add_option("target", y_path)->required();
    envelope_cmd->add_option("map", map_path)->required();

    auto* check = app.add_subcommand("check", "quasisymmetry checks for a mapping");
    check->add_option("source", x_path)->required();
    check->add_option("target", y_path)->required();
    check->add_option("map", map_path)->required();
    check->add_option("--eta", eta_spec, "modulus spec: linear:C | power:alpha[,C] | pl:(t,v);...");
    check->add_flag("--one-qs", one_qs, "eta(1)=1 feasibility, image ultrametricity, equivalences");
    check->add_option("--bilipschitz", bilipschitz_c, "verify the L bound for eta(t)=C*t");
    check->add_flag("--metric-target", metric_target,
                    "validate the target as a plain metric space");

    auto* bounds = app.add_subcommand("bounds", "diameter-distortion bounds");
    bounds->add_option("source", x_path)->required();
    bounds->add_option("target", y_path)->required();
    bounds->add_option("map", map_path)->required();
    bounds->add_option("--eta", eta_spec)->required();
    bounds->add_flag("--all-nested", all_nested, "every nested ball pair with diam A > 0");
    bounds->add_flag("--exhaustive-subsets", exhaustive_subsets,
                     "every nested subset pair (|X| <= 8)");
    bounds->add_option("--A", a_csv, "comma-separated point names");
    bounds->add_option("--B", b_csv, "comma-separated point names");
    bounds->add_option("--pointwise", pointwise, "two point names: pointwise distance bounds");

    auto* iso = app.add_subcommand("iso", "rooted-tree isomorphism of two tree files");
    iso->add_option("treeA", tree_a)->required();
    iso->add_option("treeB", tree_b)->required();
    iso->add_flag("--respect-labels", respect_labels, "require equal labels (stricter than the"
                                                      " unlabeled check)");

    auto* bp = app.add_subcommand("ball-preserving",
                                  "ball-preservation of a map, or the iso<->ball-preserving "
                                  "equivalence of two spaces");
    bp->add_option("source", x_path)->required();
    bp->add_option("target", y_path)->required();
    bp->add_option("--map", map_path, "check this specific mapping");

    std::string config_path, labels_csv, steps_spec, target_out, map_out;
    std::uint64_t seed = 0;
    int n = 1, depth = 1, branch_min = 2, branch_max = 4;
    auto* gen = app.add_subcommand("gen", "seeded random ultrametric space");
    gen->add_option("--config", config_path, "GenConfig JSON file (overrides the flags)");
    gen->add_option("--seed", seed);
    gen->add_option("--n", n);
    gen->add_option("--depth", depth);
    gen->add_option("--labels", labels_csv, "comma-separated label pool (default: depth..1)");
    gen->add_option("--branch-min", branch_min);
    gen->add_option("--branch-max", branch_max);
    gen->add_option("--apply-steps", steps_spec,
                    "also emit a monotone image space, e.g. \"1:1;3:9\"");
    gen->add_option("--target-out", target_out);
    gen->add_option("--map-out", map_out);

    std::string apply_at;
    auto* inverse_eta = app.add_subcommand("inverse-eta", "inverse modulus per the duality");
    inverse_eta->add_option("--eta", eta_spec)->required();
    inverse_eta->add_option("--at", apply_at, "evaluate the inverse modulus at this rational");

    // --pretty/--out may appear after the subcommand
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help/--version land here with code 0
    }

    try {
        if (validate->parsed()) return cmd_validate(space_path, metric, options);
        if (tree->parsed()) return cmd_tree(space_path, options);
        if (balls->parsed()) return cmd_balls(space_path, options);
        if (envelope_cmd->parsed()) return cmd_envelope(x_path, y_path, map_path, options);
        if (check->parsed())
            return cmd_check(x_path, y_path, map_path, eta_spec, one_qs, bilipschitz_c,
                             metric_target, options);
        if (bounds->parsed())
            return cmd_bounds(x_path, y_path, map_path, eta_spec, all_nested, exhaustive_subsets,
                              a_csv, b_csv, pointwise, options);
        if (iso->parsed()) return cmd_iso(tree_a, tree_b, respect_labels, options);
        if (bp->parsed()) return cmd_ball_preserving(x_path, y_path, map_path, options);
        if (gen->parsed())
            return cmd_gen(config_path, seed, n, depth, labels_csv, branch_min, branch_max,
                           steps_spec, target_out, map_out, options);
        if (inverse_eta->parsed()) return cmd_inverse_eta(eta_spec, apply_at, options);
    } catch (const umq::Error& e) {
        Json j;
        j["command"] = argc > 1 ? argv[1] : "";
        j["version"] = umq::kVersion;
        j["verdict"] = "error";
        j["error"] = error_json(e);
        std::cout << (options.pretty ? j.dump(2) : j.dump()) << "\n";
        return 2;
    }
    return 2;
}
