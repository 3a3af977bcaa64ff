#include "umq/kernels.hpp"

#include <algorithm>
#include <climits>
#include <unordered_set>

#include "umq/errors.hpp"

namespace umq::kernels {

namespace {

constexpr long kNone = LONG_MAX;

inline long as_result(long encoded) { return encoded == kNone ? -1 : encoded; }

// Lexicographically first violation for a fixed outer index i; kNone if none.
template <typename Check>
long first_for_outer(int n, int i, Check&& check) {
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            if (check(i, j, k)) {
                return encode_triple(n, i, j, k);
            }
        }
    }
    return kNone;
}

// min-reduction over outer indices; the outer index is the leading lex key,
// so the minimum over per-i first hits is the global lex-first violation.
template <typename Check>
long scan_triples(int n, Exec exec, Check&& check) {
    if (exec == Exec::Serial) {
        for (int i = 0; i < n; ++i) {
            const long hit = first_for_outer(n, i, check);
            if (hit != kNone) return hit;
        }
        return -1;
    }
    long best = kNone;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (int i = 0; i < n; ++i) {
        const long hit = first_for_outer(n, i, check);
        best = std::min(best, hit);
    }
    return as_result(best);
}

}  // namespace

long first_strong_triangle_violation(int n, const int* v, Exec exec) {
    return scan_triples(n, exec, [n, v](int i, int j, int k) {
        const int dij = v[i * n + j];
        return dij > v[i * n + k] && dij > v[k * n + j];
    });
}

long first_strong_triangle_violation_ref(int n, const Rational* m) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const Rational& dij = m[i * n + j];
                if (dij > m[i * n + k] && dij > m[k * n + j]) {
                    return encode_triple(n, i, j, k);
                }
            }
        }
    }
    return -1;
}

long first_triangle_violation(int n, const Rational* m, Exec exec) {
    return scan_triples(n, exec, [n, m](int i, int j, int k) {
        return m[i * n + j] > m[i * n + k] + m[k * n + j];
    });
}

long first_order_violation(int n, const int* vx, const int* vy, const int* fwd, Exec exec) {
    return scan_triples(n, exec, [n, vx, vy, fwd](int x, int a, int b) {
        const int dxa = vx[x * n + a];
        const int dxb = vx[x * n + b];
        const int rxa = vy[fwd[x] * n + fwd[a]];
        const int rxb = vy[fwd[x] * n + fwd[b]];
        if (dxa == dxb) return rxa != rxb;
        if (dxa < dxb) return rxa >= rxb;
        return false;
    });
}

long first_remark_violation(int n, const int* vx, const int* vy, const int* fwd, Exec exec) {
    return scan_triples(n, exec, [n, vx, vy, fwd](int x, int a, int b) {
        const int dab = vx[a * n + b];
        const int dxa = vx[x * n + a];
        const int dxb = vx[x * n + b];
        const int rab = vy[fwd[a] * n + fwd[b]];
        const int rxa = vy[fwd[x] * n + fwd[a]];
        const int rxb = vy[fwd[x] * n + fwd[b]];
        const bool lhs7 = dab < dxa && dxa == dxb;
        const bool rhs7 = rab < rxa && rxa == rxb;
        const bool lhs8 = dab == dxa && dxa == dxb;
        const bool rhs8 = rab == rxa && rxa == rxb;
        return lhs7 != rhs7 || lhs8 != rhs8;
    });
}

std::vector<std::uint64_t> collect_ratio_keys(int n, const int* vx, const int* vy,
                                              const int* fwd, Exec exec) {
    for (std::size_t c = 0; c < static_cast<std::size_t>(n) * n; ++c) {
        if (vx[c] >= 0x10000 || vy[c] >= 0x10000) {
            throw Error("InternalError", "distance value table exceeds 16-bit packing");
        }
    }
    const auto pack = [n, vx, vy, fwd](int x, int a, int b) {
        const std::uint64_t dxa = static_cast<std::uint64_t>(vx[x * n + a]);
        const std::uint64_t dxb = static_cast<std::uint64_t>(vx[x * n + b]);
        const std::uint64_t rxa = static_cast<std::uint64_t>(vy[fwd[x] * n + fwd[a]]);
        const std::uint64_t rxb = static_cast<std::uint64_t>(vy[fwd[x] * n + fwd[b]]);
        return (dxa << 48) | (dxb << 32) | (rxa << 16) | rxb;
    };

    std::unordered_set<std::uint64_t> merged;
    if (exec == Exec::Serial) {
        for (int x = 0; x < n; ++x) {
            for (int a = 0; a < n; ++a) {
                if (a == x) continue;
                for (int b = 0; b < n; ++b) {
                    if (b == x || b == a) continue;
                    merged.insert(pack(x, a, b));
                }
            }
        }
    } else {
#pragma omp parallel
        {
            std::unordered_set<std::uint64_t> local;
#pragma omp for schedule(static) nowait
            for (int x = 0; x < n; ++x) {
                for (int a = 0; a < n; ++a) {
                    if (a == x) continue;
                    for (int b = 0; b < n; ++b) {
                        if (b == x || b == a) continue;
                        local.insert(pack(x, a, b));
                    }
                }
            }
#pragma omp critical
            merged.insert(local.begin(), local.end());
        }
    }
    std::vector<std::uint64_t> keys(merged.begin(), merged.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace umq::kernels
