#pragma once

#include <cstdint>
#include <vector>

#include "umq/rational.hpp"

namespace umq::kernels {

/// Every parallel kernel is required to produce bit-identical results to its
/// serial counterpart: first-violation scans reduce to the lexicographically
/// smallest encoded triple, set-building scans merge into an order-free set
/// that is canonically sorted afterwards.
enum class Exec { Serial, Parallel };

/// Encodes the ordered triple (i,j,k) as (i*n + j)*n + k.
inline long encode_triple(int n, int i, int j, int k) {
    return (static_cast<long>(i) * n + j) * n + k;
}

/// First ordered triple (i,j,k) of pairwise-distinct indices, in lexicographic
/// order, with d(i,j) > max(d(i,k), d(k,j)); -1 if none. Distances are given
/// as indices into the sorted distance-value table, so only integer
/// comparisons happen in the sweep.
long first_strong_triangle_violation(int n, const int* value_index, Exec exec);

/// Reference implementation working directly on the rational matrix
/// (row-major n*n). Kept independent of the value-index path for testing and
/// benchmarking.
long first_strong_triangle_violation_ref(int n, const Rational* matrix);

/// Plain triangle inequality d(i,j) <= d(i,k) + d(k,j); needs rational sums.
long first_triangle_violation(int n, const Rational* matrix, Exec exec);

/// First ordered triple (x,a,b) of pairwise-distinct indices violating
/// per-basepoint order preservation under the bijection fwd:
///   d(x,a) = d(x,b) but rho(fx,fa) != rho(fx,fb), or
///   d(x,a) < d(x,b) but rho(fx,fa) >= rho(fx,fb).
/// vx/vy are the value-index matrices of source and target; -1 if none.
long first_order_violation(int n, const int* vx, const int* vy, const int* fwd, Exec exec);

/// First ordered triple (x,a,b) of pairwise-distinct indices violating either
/// of the two biconditionals
///   d(a,b) < d(x,a) = d(x,b)  <=>  rho(fa,fb) < rho(fx,fa) = rho(fx,fb)
///   d(a,b) = d(x,a) = d(x,b)  <=>  rho(fa,fb) = rho(fx,fa) = rho(fx,fb)
/// -1 if none.
long first_remark_violation(int n, const int* vx, const int* vy, const int* fwd, Exec exec);

/// Distinct packed quadruples (d(x,a), d(x,b), rho(fx,fa), rho(fx,fb)) of
/// 16-bit value indices over all pairwise-distinct ordered triples (x,a,b),
/// sorted ascending. Backs the constraint-envelope computation.
std::vector<std::uint64_t> collect_ratio_keys(int n, const int* vx, const int* vy,
                                              const int* fwd, Exec exec);

}  // namespace umq::kernels
