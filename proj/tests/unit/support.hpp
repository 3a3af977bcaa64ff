#pragma once

#include <string>
#include <vector>

#include "umq/errors.hpp"
#include "umq/generator.hpp"
#include "umq/json_io.hpp"
#include "umq/space.hpp"

namespace umqtest {

inline umq::Space make_space(std::vector<std::string> points,
                             const std::vector<std::vector<std::string>>& matrix,
                             umq::MetricKind kind = umq::MetricKind::Ultrametric) {
    std::vector<std::vector<umq::Rational>> values;
    for (const auto& row : matrix) {
        std::vector<umq::Rational> out;
        for (const auto& cell : row) {
            out.push_back(umq::parse_rational(cell));
        }
        values.push_back(std::move(out));
    }
    return umq::Space::validated(std::move(points), values, kind);
}

inline umq::Space x3() {
    return make_space({"p0", "p1", "p2"}, {{"0", "1", "2"}, {"1", "0", "2"}, {"2", "2", "0"}});
}

// two clusters {p0,p1} and {p2,p3}, inner distance 1, cross 3
inline umq::Space x4() {
    return make_space({"p0", "p1", "p2", "p3"}, {{"0", "1", "3", "3"},
                                                 {"1", "0", "3", "3"},
                                                 {"3", "3", "0", "1"},
                                                 {"3", "3", "1", "0"}});
}

// distances squared relative to x4
inline umq::Space y4() {
    return make_space({"q0", "q1", "q2", "q3"}, {{"0", "1", "9", "9"},
                                                 {"1", "0", "9", "9"},
                                                 {"9", "9", "0", "1"},
                                                 {"9", "9", "1", "0"}});
}

inline umq::Space eq3() {
    return make_space({"e0", "e1", "e2"}, {{"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
}

template <typename F>
std::string error_code_of(F&& f) {
    try {
        f();
    } catch (const umq::Error& e) {
        return e.code();
    }
    return "";
}

template <typename F>
std::vector<int> error_indices_of(F&& f) {
    try {
        f();
    } catch (const umq::Error& e) {
        return e.indices();
    }
    return {};
}

// seeded random configs for property tests; distances and shapes vary but the
// sequence is fully determined by the rng state
inline umq::GenConfig random_config(umq::SplitMix64& rng, int max_n, int max_depth = 4) {
    umq::GenConfig config;
    config.seed = rng.next();
    config.n = 1 + static_cast<int>(rng.below(max_n));
    config.max_depth = 1 + static_cast<int>(rng.below(max_depth));
    config.branch_min = 2;
    config.branch_max = 2 + static_cast<int>(rng.below(4));
    const int pool_size = config.max_depth + static_cast<int>(rng.below(3));
    std::vector<umq::Rational> pool;
    umq::Rational value(0);
    for (int i = 0; i < pool_size; ++i) {
        value += umq::frac(1 + static_cast<long>(rng.below(20)), 1 + static_cast<long>(rng.below(8)));
        pool.push_back(value);
    }
    config.labels = pool;
    return config;
}

inline umq::Space random_space(umq::SplitMix64& rng, int max_n, int max_depth = 4) {
    return umq::gen_space(random_config(rng, max_n, max_depth));
}

// strictly increasing positive rational steps over the space's distance values
inline std::vector<std::pair<umq::Rational, umq::Rational>> random_steps(umq::SplitMix64& rng,
                                                                         const umq::Space& space) {
    std::vector<std::pair<umq::Rational, umq::Rational>> steps;
    umq::Rational out(0);
    for (const umq::Rational& value : space.values()) {
        if (value == 0) continue;
        out += umq::frac(1 + static_cast<long>(rng.below(24)), 1 + static_cast<long>(rng.below(9)));
        steps.emplace_back(value, out);
    }
    return steps;
}

}  // namespace umqtest
