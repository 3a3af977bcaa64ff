// Timing comparison of the serial reference implementations against the
// value-index / OpenMP kernels, on seeded inputs. Wall-clock only; the two
// paths are asserted bit-identical before timing.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef UMQ_HAVE_OPENMP
#include <omp.h>
#endif

#include "umq/generator.hpp"
#include "umq/kernels.hpp"
#include "umq/quasisymmetry.hpp"
#include "umq/space.hpp"

using namespace umq;
using kernels::Exec;

namespace {

double time_of(const std::function<void()>& body, int repeats) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) body();
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(elapsed).count() / repeats;
}

Space seeded_space(std::uint64_t seed, int n) {
    GenConfig config;
    config.seed = seed;
    config.n = n;
    config.max_depth = 5;
    config.branch_max = 4;
    Rational value(0);
    SplitMix64 rng(seed ^ 0x51ED);
    for (int i = 0; i < 7; ++i) {
        value += frac(1 + static_cast<long>(rng.below(9)), 1 + static_cast<long>(rng.below(4)));
        config.labels.push_back(value);
    }
    return gen_space(config);
}

std::vector<std::pair<Rational, Rational>> seeded_steps(std::uint64_t seed, const Space& space) {
    SplitMix64 rng(seed ^ 0x57E5);
    std::vector<std::pair<Rational, Rational>> steps;
    Rational out(0);
    for (const Rational& value : space.values()) {
        if (value == 0) continue;
        out += frac(1 + static_cast<long>(rng.below(24)), 1 + static_cast<long>(rng.below(9)));
        steps.emplace_back(value, out);
    }
    return steps;
}

}  // namespace

int main() {
#ifdef UMQ_HAVE_OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel paths run sequentially\n");
#endif
    std::printf("%-28s %8s %12s %12s %9s\n", "kernel", "n", "serial(ms)", "parallel(ms)",
                "speedup");

    for (const int n : {32, 64, 96, 128}) {
        const Space x = seeded_space(1000 + n, n);
        const auto [y, f] = gen_monotone_map(x, seeded_steps(2000 + n, x));

        // strong triangle validation sweep
        {
            const long ref = kernels::first_strong_triangle_violation_ref(n, x.matrix_data());
            const long par =
                kernels::first_strong_triangle_violation(n, x.value_index_data(), Exec::Parallel);
            if (ref != par) {
                std::printf("MISMATCH in triangle kernel at n=%d\n", n);
                return 1;
            }
            const int repeats = n <= 64 ? 5 : 2;
            const double serial_ms = time_of(
                [&] { kernels::first_strong_triangle_violation_ref(n, x.matrix_data()); },
                repeats);
            const double parallel_ms = time_of(
                [&] {
                    kernels::first_strong_triangle_violation(n, x.value_index_data(),
                                                             Exec::Parallel);
                },
                repeats);
            std::printf("%-28s %8d %12.3f %12.3f %8.1fx\n", "strong-triangle scan", n, serial_ms,
                        parallel_ms, serial_ms / parallel_ms);
        }

        // constraint envelope
        {
            const ConstraintEnvelope a = envelope(x, y, f, Exec::Serial);
            const ConstraintEnvelope b = envelope(x, y, f, Exec::Parallel);
            if (a.constraints.size() != b.constraints.size()) {
                std::printf("MISMATCH in envelope at n=%d\n", n);
                return 1;
            }
            for (std::size_t i = 0; i < a.constraints.size(); ++i) {
                if (!(a.constraints[i] == b.constraints[i])) {
                    std::printf("MISMATCH in envelope at n=%d\n", n);
                    return 1;
                }
            }
            const int repeats = n <= 64 ? 3 : 1;
            const double serial_ms =
                time_of([&] { envelope(x, y, f, Exec::Serial); }, repeats);
            const double parallel_ms =
                time_of([&] { envelope(x, y, f, Exec::Parallel); }, repeats);
            std::printf("%-28s %8d %12.3f %12.3f %8.1fx\n", "constraint envelope", n, serial_ms,
                        parallel_ms, serial_ms / parallel_ms);
        }

        // per-basepoint order scan (the 1-QS sweep)
        {
            const int repeats = n <= 64 ? 5 : 2;
            const double serial_ms = time_of(
                [&] {
                    kernels::first_order_violation(n, x.value_index_data(), y.value_index_data(),
                                                   f.forward_vector().data(), Exec::Serial);
                },
                repeats);
            const double parallel_ms = time_of(
                [&] {
                    kernels::first_order_violation(n, x.value_index_data(), y.value_index_data(),
                                                   f.forward_vector().data(), Exec::Parallel);
                },
                repeats);
            std::printf("%-28s %8d %12.3f %12.3f %8.1fx\n", "order-preservation scan", n,
                        serial_ms, parallel_ms, serial_ms / parallel_ms);
        }
    }
    return 0;
}
