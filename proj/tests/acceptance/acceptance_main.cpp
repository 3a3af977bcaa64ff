// Acceptance suite: one pass/fail line per criterion, everything decided with
// exact rational arithmetic (zero tolerance). Returns nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "umq/ballean.hpp"
#include "umq/errors.hpp"
#include "umq/generator.hpp"
#include "umq/json_io.hpp"
#include "umq/mapping.hpp"
#include "umq/modulus.hpp"
#include "umq/quasisymmetry.hpp"
#include "umq/space.hpp"
#include "umq/tree.hpp"

using namespace umq;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Space fixture_x3() {
    return Space::validated({"p0", "p1", "p2"},
                            {{Rational(0), Rational(1), Rational(2)},
                             {Rational(1), Rational(0), Rational(2)},
                             {Rational(2), Rational(2), Rational(0)}});
}

Space fixture_eq3() {
    return Space::validated({"e0", "e1", "e2"},
                            {{Rational(0), Rational(1), Rational(1)},
                             {Rational(1), Rational(0), Rational(1)},
                             {Rational(1), Rational(1), Rational(0)}});
}

Space fixture_x4() {
    return Space::validated({"p0", "p1", "p2", "p3"},
                            {{Rational(0), Rational(1), Rational(3), Rational(3)},
                             {Rational(1), Rational(0), Rational(3), Rational(3)},
                             {Rational(3), Rational(3), Rational(0), Rational(1)},
                             {Rational(3), Rational(3), Rational(1), Rational(0)}});
}

GenConfig seeded_config(SplitMix64& rng, int max_n) {
    GenConfig config;
    config.seed = rng.next();
    config.n = 1 + static_cast<int>(rng.below(max_n));
    config.max_depth = 1 + static_cast<int>(rng.below(6));
    config.branch_min = 2;
    config.branch_max = 2 + static_cast<int>(rng.below(4));
    const int pool_size = config.max_depth + static_cast<int>(rng.below(3));
    Rational value(0);
    for (int i = 0; i < pool_size; ++i) {
        value += frac(1 + static_cast<long>(rng.below(20)), 1 + static_cast<long>(rng.below(8)));
        config.labels.push_back(value);
    }
    return config;
}

std::vector<std::pair<Rational, Rational>> seeded_steps(SplitMix64& rng, const Space& space) {
    std::vector<std::pair<Rational, Rational>> steps;
    Rational out(0);
    for (const Rational& value : space.values()) {
        if (value == 0) continue;
        out += frac(1 + static_cast<long>(rng.below(24)), 1 + static_cast<long>(rng.below(9)));
        steps.emplace_back(value, out);
    }
    return steps;
}

bool matrices_equal(const Space& a, const Space& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) {
            if (a.dist(i, j) != b.dist(i, j)) return false;
        }
    }
    return true;
}

struct GeneratedMap {
    Space source;
    Space target;
    PointMap map;
};

// the 500 spaces of criteria 1-2 and the 300 maps of criteria 4-8 are shared
std::vector<Space>& shared_spaces() {
    static std::vector<Space> spaces = [] {
        std::vector<Space> out;
        SplitMix64 rng(0x5EEDBA11);
        out.reserve(500);
        for (int i = 0; i < 500; ++i) {
            out.push_back(gen_space(seeded_config(rng, 64)));
        }
        return out;
    }();
    return spaces;
}

std::vector<GeneratedMap>& shared_maps() {
    static std::vector<GeneratedMap> maps = [] {
        std::vector<GeneratedMap> out;
        SplitMix64 rng(0xAB1E5EED);
        out.reserve(300);
        while (out.size() < 300) {
            GenConfig config = seeded_config(rng, 24);
            config.n = std::max(config.n, 2);
            Space source = gen_space(config);
            auto [target, map] = gen_monotone_map(source, seeded_steps(rng, source));
            out.push_back({std::move(source), std::move(target), std::move(map)});
        }
        return out;
    }();
    return maps;
}

// ---- criteria ------------------------------------------------------------

Outcome criterion_round_trip() {
    const auto start = std::chrono::steady_clock::now();
    int checked = 0;
    for (const Space& s : shared_spaces()) {
        const Space back = space_from_tree(RepresentingTree::build(s));
        if (!matrices_equal(back, s) || back.points() != s.points()) {
            return {false, "round trip differs for seeded space #" + std::to_string(checked)};
        }
        ++checked;
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        return {false, "500 round trips took " + std::to_string(elapsed) + "s (budget 10s)"};
    }
    char buffer[128];
    std::snprintf(buffer, sizeof(buffer), "500 spaces (n <= 64) in %.2fs", elapsed);
    return {true, buffer};
}

Outcome criterion_ballean_bijection() {
    long total_balls = 0;
    int index = 0;
    for (const Space& s : shared_spaces()) {
        const RepresentingTree tree = RepresentingTree::build(s);
        const Ballean via_tree = enumerate_ballean(tree);
        const Ballean brute = oracle_ballean(s);
        if (via_tree.size() != tree.node_count() || brute.size() != tree.node_count()) {
            return {false, "ballean size != node count for space #" + std::to_string(index)};
        }
        for (int b = 0; b < brute.size(); ++b) {
            if (via_tree.balls[b].points != brute.balls[b].points ||
                via_tree.balls[b].diameter != brute.balls[b].diameter) {
                return {false, "ballean sets differ for space #" + std::to_string(index)};
            }
        }
        total_balls += brute.size();
        ++index;
    }
    return {true, "500 balleans, " + std::to_string(total_balls) + " balls, all node sets"};
}

Outcome criterion_ball_characterization() {
    SplitMix64 rng(0xBA11);
    long subsets = 0;
    for (int trial = 0; trial < 100; ++trial) {
        GenConfig config = seeded_config(rng, 10);
        const Space s = gen_space(config);
        const int n = s.size();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) subset.push_back(i);
            }
            if (is_ball(s, subset).is_ball != oracle_is_ball(s, subset)) {
                return {false, "characterization disagrees with the oracle (space #" +
                                   std::to_string(trial) + ", mask " + std::to_string(mask) + ")"};
            }
            ++subsets;
        }
    }
    return {true, "100 spaces, " + std::to_string(subsets) + " subsets, zero disagreements"};
}

Outcome criterion_ultrametric_image() {
    for (std::size_t i = 0; i < shared_maps().size(); ++i) {
        const GeneratedMap& g = shared_maps()[i];
        if (!is_one_qs(g.source, g.target, g.map).one_qs) {
            return {false, "generated map #" + std::to_string(i) + " is not 1-QS"};
        }
        if (!image_ultrametric_check(g.source, g.target, g.map).ultrametric) {
            return {false, "image of map #" + std::to_string(i) + " is not ultrametric"};
        }
        if (!remark_equivalences_check(g.source, g.target, g.map).holds) {
            return {false, "equivalences fail for map #" + std::to_string(i)};
        }
    }
    return {true, "300 monotone maps: 1-QS, ultrametric image, equivalences exhaustive"};
}

Outcome criterion_distortion_bounds() {
    long pairs_checked = 0;
    for (std::size_t i = 0; i < shared_maps().size(); ++i) {
        const GeneratedMap& g = shared_maps()[i];
        if (g.source.size() < 2) continue;
        const ConstraintEnvelope env = envelope(g.source, g.target, g.map);
        const Modulus eta = (i % 2 == 0) ? fit_linear_modulus(env)
                                         : fit_power_modulus(env, 2 + (i % 3));
        if (!check_modulus(env, eta).admissible) {
            return {false, "fitted modulus is not admissible for map #" + std::to_string(i)};
        }
        const Ballean balls = enumerate_ballean(g.source);
        for (const Ball& a : balls.balls) {
            if (a.diameter == 0) continue;
            for (const Ball& b : balls.balls) {
                if (b.points.size() < a.points.size()) continue;
                if (!std::includes(b.points.begin(), b.points.end(), a.points.begin(),
                                   a.points.end())) {
                    continue;
                }
                const DiameterBoundsReport r =
                    verify_diameter_bounds(g.source, g.target, g.map, eta, a.points, b.points,
                                           &env);
                if (!r.sharp_lower_ok || !r.sharp_upper_ok || !r.ref_lower_ok ||
                    !r.ref_upper_ok || !r.sharp_within_ref) {
                    return {false, "a bound fails for map #" + std::to_string(i)};
                }
                ++pairs_checked;
            }
        }
    }

    // the squared fixture is sharp: lower = realized = upper = 1/9, and the
    // general-metric interval [1/18, 4/9] strictly contains it
    const Space x4 = fixture_x4();
    const auto [y4, f] = gen_monotone_map(x4, {{Rational(1), Rational(1)},
                                               {Rational(3), Rational(9)}});
    const std::vector<int> A = {0, 1};
    const std::vector<int> B = {0, 1, 2, 3};
    const DiameterBoundsReport r =
        verify_diameter_bounds(x4, y4, f, Modulus::parse("power:2"), A, B);
    if (!(r.ratio == Rational(1, 9) && r.sharp_lower.has_value() && r.sharp_upper.has_value() &&
          *r.sharp_lower == Rational(1, 9) && *r.sharp_upper == Rational(1, 9))) {
        return {false, "squared fixture is not sharp at 1/9"};
    }
    if (!(r.ref_lower.has_value() && r.ref_upper.has_value() &&
          *r.ref_lower == Rational(1, 18) && *r.ref_upper == Rational(4, 9) &&
          *r.ref_lower < *r.sharp_lower && *r.sharp_upper < *r.ref_upper)) {
        return {false, "reference interval is not [1/18, 4/9] strictly around 1/9"};
    }
    return {true, std::to_string(pairs_checked) + " nested ball pairs; fixture sharp at 1/9"};
}

Outcome criterion_inverse_modulus() {
    const Modulus linear = Modulus::parse("linear:2");
    const auto at3 = linear.inverse_modulus().evaluate(Rational(3));
    if (!at3 || *at3 != 6) {
        return {false, "eta(t)=2t must give eta'(3)=6"};
    }
    for (const char* spec : {"linear:2", "linear:7/4", "pl:(1,1);(2,3);(5,11)", "pl:(3,5)"}) {
        const Modulus eta = Modulus::parse(spec);
        const Modulus twice = eta.inverse_modulus().inverse_modulus();
        for (int i = 1; i <= 20; ++i) {
            const Rational t = frac(i, 7);
            if (*eta.evaluate(t) != *twice.evaluate(t)) {
                return {false, std::string("double inversion moved ") + spec};
            }
        }
    }
    for (std::size_t i = 0; i < shared_maps().size(); ++i) {
        const GeneratedMap& g = shared_maps()[i];
        const ConstraintEnvelope fwd = envelope(g.source, g.target, g.map);
        const ConstraintEnvelope bwd = envelope(g.target, g.source, g.map.inverted());
        const ConstraintEnvelope transformed = inverse_envelope_transform(fwd);
        if (bwd.constraints.size() != transformed.constraints.size()) {
            return {false, "inverse envelope size differs for map #" + std::to_string(i)};
        }
        for (std::size_t c = 0; c < bwd.constraints.size(); ++c) {
            if (!(bwd.constraints[c] == transformed.constraints[c])) {
                return {false, "inverse envelope differs for map #" + std::to_string(i)};
            }
        }
    }
    return {true, "eta'(3)=6; 20-point involution; 300 envelope dualities exact"};
}

Outcome criterion_tree_isomorphism() {
    for (std::size_t i = 0; i < shared_maps().size(); ++i) {
        const GeneratedMap& g = shared_maps()[i];
        const RepresentingTree tx = RepresentingTree::build(g.source);
        const RepresentingTree ty = RepresentingTree::build(g.target);
        if (!rooted_tree_isomorphic(tx, ty).has_value()) {
            return {false, "trees of 1-QS map #" + std::to_string(i) + " are not isomorphic"};
        }
    }
    const IffReport r = ball_preserving_iff_iso_check(fixture_eq3(), fixture_x3());
    if (r.isomorphic || r.certificate != IffReport::Certificate::ExhaustiveNoBijection ||
        r.bijections_checked != 6 || r.bijections_ball_preserving != 0) {
        return {false, "equilateral-3 vs X3 must fail with all 6 bijections rejected"};
    }
    return {true, "300 witnesses; equilateral-3 vs X3: none, 6/6 bijections fail"};
}

Outcome criterion_ball_preservation() {
    for (std::size_t i = 0; i < shared_maps().size(); ++i) {
        const GeneratedMap& g = shared_maps()[i];
        if (!is_ball_preserving(g.source, g.target, g.map).preserving) {
            return {false, "1-QS map #" + std::to_string(i) + " is not ball-preserving"};
        }
        const IffReport iff = ball_preserving_iff_iso_check(g.source, g.target);
        if (!iff.isomorphic || !iff.phi_ball_preserving) {
            return {false, "constructed phi fails for map #" + std::to_string(i)};
        }
    }
    return {true, "300 maps ball-preserving; every witness phi verified"};
}

Outcome criterion_bilipschitz() {
    const Space x4 = fixture_x4();
    const auto [doubled, id] = gen_monotone_map(x4, {{Rational(1), Rational(2)},
                                                     {Rational(3), Rational(6)}});
    const BiLipschitzReport fixture = bilipschitz_constant(x4, doubled, id, Rational(1));
    if (fixture.L != 2 || !fixture.verified || !fixture.upper_tight_everywhere) {
        return {false, "scale-by-2 fixture must give L=2 with the upper bound tight"};
    }
    SplitMix64 rng(0xB111);
    int checked = 0;
    while (checked < 100) {
        GenConfig config = seeded_config(rng, 16);
        config.n = std::max(config.n, 2);
        const Space x = gen_space(config);
        const auto [y, f] = gen_monotone_map(x, seeded_steps(rng, x));
        const ConstraintEnvelope env = envelope(x, y, f);
        const Modulus eta = fit_linear_modulus(env);
        const Rational C = *eta.evaluate(Rational(1));
        const BiLipschitzReport r = bilipschitz_constant(x, y, f, C);
        if (!r.verified) {
            return {false, "bi-Lipschitz inequality fails at trial " + std::to_string(checked)};
        }
        ++checked;
    }
    return {true, "L=2 fixture tight; 100 linear-modulus maps verified on all pairs"};
}

Outcome criterion_envelope_performance() {
    SplitMix64 rng(0xFA57);
    GenConfig config;
    config.seed = rng.next();
    config.n = 64;
    config.max_depth = 5;
    config.branch_min = 2;
    config.branch_max = 4;
    Rational value(0);
    for (int i = 0; i < 7; ++i) {
        value += frac(1 + static_cast<long>(rng.below(9)), 1 + static_cast<long>(rng.below(4)));
        config.labels.push_back(value);
    }
    const Space x = gen_space(config);
    const auto [y, f] = gen_monotone_map(x, seeded_steps(rng, x));
    const auto start = std::chrono::steady_clock::now();
    const ConstraintEnvelope env = envelope(x, y, f);
    const double elapsed = seconds_since(start);
    if (elapsed >= 2.0) {
        return {false, "envelope on n=64 took " + std::to_string(elapsed) + "s (budget 2s)"};
    }
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer), "n=64, 249984 ordered triples, %zu constraints in %.3fs",
                  env.constraints.size(), elapsed);
    return {true, buffer};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1. round-trip fidelity", criterion_round_trip},
        {"2. ballean-tree bijection", criterion_ballean_bijection},
        {"3. ball characterization vs oracle", criterion_ball_characterization},
        {"4. ultrametric image of 1-QS maps", criterion_ultrametric_image},
        {"5. distortion bounds", criterion_distortion_bounds},
        {"6. inverse modulus and envelope duality", criterion_inverse_modulus},
        {"7. tree isomorphism", criterion_tree_isomorphism},
        {"8. ball preservation", criterion_ball_preservation},
        {"9. bi-Lipschitz constant", criterion_bilipschitz},
        {"10. envelope performance", criterion_envelope_performance},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome outcome;
        try {
            outcome = run();
        } catch (const Error& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                    outcome.detail.c_str());
        if (!outcome.pass) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
