#include "umq/quasisymmetry.hpp"

#include <algorithm>

#include "umq/errors.hpp"

namespace umq {

namespace {

void require_same_size(const Space& source, const Space& target, const PointMap& map) {
    if (map.size() != source.size() || source.size() != target.size()) {
        throw Error("NotBijective", "mapping does not pair the two spaces point-for-point");
    }
}

TripleWitness decode_triple(long encoded, int n) {
    TripleWitness w;
    w.x = static_cast<int>(encoded / (static_cast<long>(n) * n));
    w.a = static_cast<int>((encoded / n) % n);
    w.b = static_cast<int>(encoded % n);
    return w;
}

}  // namespace

std::vector<Constraint> ConstraintEnvelope::dominant() const {
    std::vector<Constraint> out;
    for (const Constraint& c : constraints) {
        if (!out.empty() && out.back().t == c.t) {
            out.back().r = c.r;  // constraints are sorted by (t, r)
        } else {
            out.push_back(c);
        }
    }
    return out;
}

ConstraintEnvelope envelope(const Space& source, const Space& target, const PointMap& map,
                            kernels::Exec exec) {
    require_same_size(source, target, map);
    const int n = source.size();
    if (n < 2) {
        throw Error("TooSmall", "the constraint envelope needs at least 2 points");
    }
    ConstraintEnvelope env;
    if (exec == kernels::Exec::Serial) {
        // reference path: rationals straight off the matrices
        for (int x = 0; x < n; ++x) {
            for (int a = 0; a < n; ++a) {
                if (a == x) continue;
                for (int b = 0; b < n; ++b) {
                    if (b == x || b == a) continue;
                    env.constraints.push_back(
                        {source.dist(x, a) / source.dist(x, b),
                         target.dist(map.forward(x), map.forward(a)) /
                             target.dist(map.forward(x), map.forward(b))});
                }
            }
        }
    } else {
        const auto keys =
            kernels::collect_ratio_keys(n, source.value_index_data(), target.value_index_data(),
                                        map.forward_vector().data(), exec);
        env.constraints.reserve(keys.size());
        for (const std::uint64_t key : keys) {
            const auto& xv = source.values();
            const auto& yv = target.values();
            env.constraints.push_back({xv[(key >> 48) & 0xffff] / xv[(key >> 32) & 0xffff],
                                       yv[(key >> 16) & 0xffff] / yv[key & 0xffff]});
        }
    }
    std::sort(env.constraints.begin(), env.constraints.end(),
              [](const Constraint& a, const Constraint& b) {
                  const int ct = cmp(a.t, b.t);
                  return ct != 0 ? ct < 0 : a.r < b.r;
              });
    env.constraints.erase(std::unique(env.constraints.begin(), env.constraints.end()),
                          env.constraints.end());
    return env;
}

ConstraintEnvelope inverse_envelope_transform(const ConstraintEnvelope& env) {
    ConstraintEnvelope out;
    out.constraints.reserve(env.constraints.size());
    for (const Constraint& c : env.constraints) {
        out.constraints.push_back({1 / c.r, 1 / c.t});
    }
    std::sort(out.constraints.begin(), out.constraints.end(),
              [](const Constraint& a, const Constraint& b) {
                  const int ct = cmp(a.t, b.t);
                  return ct != 0 ? ct < 0 : a.r < b.r;
              });
    out.constraints.erase(std::unique(out.constraints.begin(), out.constraints.end()),
                          out.constraints.end());
    return out;
}

ModulusCheckResult check_modulus(const ConstraintEnvelope& env, const Modulus& eta) {
    for (const Constraint& c : env.constraints) {
        if (eta.compare(c.t, c.r) < 0) {
            return {false, c};
        }
    }
    return {true, std::nullopt};
}

OneQsResult is_one_qs(const Space& source, const Space& target, const PointMap& map,
                      kernels::Exec exec) {
    require_same_size(source, target, map);
    const long hit =
        kernels::first_order_violation(source.size(), source.value_index_data(),
                                       target.value_index_data(), map.forward_vector().data(), exec);
    if (hit < 0) {
        return {true, std::nullopt};
    }
    return {false, decode_triple(hit, source.size())};
}

ImageUltrametricResult image_ultrametric_check(const Space& source, const Space& target,
                                               const PointMap& map, kernels::Exec exec) {
    require_same_size(source, target, map);
    if (!source.is_ultrametric()) {
        throw Error("PreconditionNotMet", "source space must be ultrametric");
    }
    // the mapping is bijective, so the image carries all of the target
    const long hit =
        kernels::first_strong_triangle_violation(target.size(), target.value_index_data(), exec);
    if (hit < 0) {
        return {true, std::nullopt};
    }
    const TripleWitness w = decode_triple(hit, target.size());
    return {false, std::array<int, 3>{w.x, w.a, w.b}};
}

RemarkResult remark_equivalences_check(const Space& source, const Space& target,
                                       const PointMap& map, kernels::Exec exec) {
    require_same_size(source, target, map);
    if (!source.is_ultrametric() || !target.is_ultrametric()) {
        throw Error("PreconditionNotMet", "both spaces must be ultrametric");
    }
    if (!is_one_qs(source, target, map, exec).one_qs) {
        throw Error("PreconditionNotMet", "mapping is not 1-quasisymmetric");
    }
    const long hit =
        kernels::first_remark_violation(source.size(), source.value_index_data(),
                                        target.value_index_data(), map.forward_vector().data(), exec);
    if (hit < 0) {
        return {true, std::nullopt};
    }
    return {false, decode_triple(hit, source.size())};
}

namespace {

// verdict of  value >= bound  where bound = eta(arg) is compared exactly;
// "lower" verdicts use  value >= 1/(k*eta(arg))  <=>  eta(arg) >= 1/(k*value)
bool lower_bound_holds(const Modulus& eta, const Rational& arg, const Rational& value, int k) {
    return eta.compare(arg, 1 / (k * value)) >= 0;
}

bool upper_bound_holds(const Modulus& eta, const Rational& arg, const Rational& value) {
    return eta.compare(arg, value) >= 0;
}

std::vector<int> image_of(std::span<const int> subset, const PointMap& map) {
    std::vector<int> out;
    out.reserve(subset.size());
    for (const int p : subset) out.push_back(map.forward(p));
    std::sort(out.begin(), out.end());
    return out;
}

void require_admissible(const Space& source, const Space& target, const PointMap& map,
                        const Modulus& eta, const ConstraintEnvelope* precomputed) {
    const ConstraintEnvelope env =
        precomputed != nullptr ? *precomputed : envelope(source, target, map);
    const ModulusCheckResult check = check_modulus(env, eta);
    if (!check.admissible) {
        throw Error("ModulusInfeasible",
                    "eta fails the envelope at (t,r) = (" + to_string(check.witness->t) + "," +
                        to_string(check.witness->r) + ")");
    }
}

}  // namespace

DiameterBoundsReport verify_diameter_bounds(const Space& source, const Space& target,
                                            const PointMap& map, const Modulus& eta,
                                            std::span<const int> subset_A,
                                            std::span<const int> subset_B,
                                            const ConstraintEnvelope* precomputed) {
    require_same_size(source, target, map);
    {
        std::vector<int> b_sorted(subset_B.begin(), subset_B.end());
        std::sort(b_sorted.begin(), b_sorted.end());
        for (const int p : subset_A) {
            if (!std::binary_search(b_sorted.begin(), b_sorted.end(), p)) {
                throw Error("NotNested", "A contains point index " + std::to_string(p) +
                                             " which is not in B");
            }
        }
    }
    DiameterBoundsReport report;
    report.diam_A = diameter(source, subset_A);
    report.diam_B = diameter(source, subset_B);
    if (report.diam_A == 0) {
        throw Error("ZeroDiamA", "the bound requires diam A > 0");
    }
    require_admissible(source, target, map, eta, precomputed);

    const std::vector<int> fA = image_of(subset_A, map);
    const std::vector<int> fB = image_of(subset_B, map);
    report.diam_fA = diameter(target, fA);
    report.diam_fB = diameter(target, fB);
    // injectivity on >= 2 points keeps diam f(B) positive
    report.ratio = report.diam_fA / report.diam_fB;

    const Rational u = report.diam_B / report.diam_A;  // >= 1
    const Rational v = report.diam_A / report.diam_B;  // <= 1

    if (const auto eu = eta.evaluate(u)) {
        report.sharp_lower = 1 / *eu;
        report.ref_lower = 1 / (2 * *eu);
    }
    if (const auto ev = eta.evaluate(v)) {
        report.sharp_upper = *ev;
    }
    if (const auto e2v = eta.evaluate(2 * v)) {
        report.ref_upper = *e2v;
    }
    report.sharp_lower_ok = lower_bound_holds(eta, u, report.ratio, 1);
    report.ref_lower_ok = lower_bound_holds(eta, u, report.ratio, 2);
    report.sharp_upper_ok = upper_bound_holds(eta, v, report.ratio);
    report.ref_upper_ok = upper_bound_holds(eta, 2 * v, report.ratio);
    // 1/(2 eta(u)) < 1/eta(u) always; eta(v) < eta(2v) since eta is strictly
    // increasing and v > 0. With exact values present, compare directly.
    report.sharp_within_ref = true;
    if (report.sharp_lower && report.ref_lower) {
        report.sharp_within_ref = *report.ref_lower < *report.sharp_lower;
    }
    if (report.sharp_within_ref && report.sharp_upper && report.ref_upper) {
        report.sharp_within_ref = *report.sharp_upper < *report.ref_upper;
    }
    if (report.sharp_lower) {
        report.slack_lower = report.ratio - *report.sharp_lower;
    }
    if (report.sharp_upper) {
        report.slack_upper = *report.sharp_upper - report.ratio;
    }
    return report;
}

PointwiseBoundsReport pointwise_bounds(const Space& source, const Space& target,
                                       const PointMap& map, const Modulus& eta, int x, int y,
                                       const ConstraintEnvelope* precomputed) {
    require_same_size(source, target, map);
    if (x == y) {
        throw Error("SamePoint", "pointwise bounds need two distinct points");
    }
    require_admissible(source, target, map, eta, precomputed);
    PointwiseBoundsReport report;
    report.distance = source.dist(x, y);
    report.rho = target.dist(map.forward(x), map.forward(y));
    const Rational diam_X = diameter(source);
    const Rational diam_Y = diameter(target);
    const Rational u = diam_X / report.distance;
    const Rational v = report.distance / diam_X;
    if (const auto eu = eta.evaluate(u)) {
        report.lower = diam_Y / *eu;
    }
    if (const auto ev = eta.evaluate(v)) {
        report.upper = diam_Y * *ev;
    }
    // rho >= diamY/eta(u)  <=>  eta(u) >= diamY/rho
    report.lower_ok = eta.compare(u, diam_Y / report.rho) >= 0;
    // rho <= diamY*eta(v)  <=>  eta(v) >= rho/diamY
    report.upper_ok = eta.compare(v, report.rho / diam_Y) >= 0;
    return report;
}

BiLipschitzReport bilipschitz_constant(const Space& source, const Space& target,
                                       const PointMap& map, const Rational& C) {
    require_same_size(source, target, map);
    if (source.size() < 2) {
        throw Error("TooSmall", "bi-Lipschitz verification needs at least 2 points");
    }
    const Modulus eta = Modulus::linear(C);
    require_admissible(source, target, map, eta, nullptr);

    const Rational diam_X = diameter(source);
    const Rational diam_Y = diameter(target);
    BiLipschitzReport report;
    report.L = C * std::max(Rational(diam_Y / diam_X), Rational(diam_X / diam_Y));
    report.verified = true;
    report.upper_tight_everywhere = true;
    for (int i = 0; i < source.size() && report.verified; ++i) {
        for (int j = i + 1; j < source.size(); ++j) {
            const Rational& d = source.dist(i, j);
            const Rational& rho = target.dist(map.forward(i), map.forward(j));
            if (rho * report.L < d || rho > report.L * d) {
                report.verified = false;
                report.witness_x = i;
                report.witness_y = j;
                break;
            }
            if (rho != report.L * d) {
                report.upper_tight_everywhere = false;
            }
        }
    }
    return report;
}

}  // namespace umq
