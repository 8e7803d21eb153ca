// Benchmark: OpenMP-chunked sweep driver vs the plain serial reference.
// Also cross-checks that order-independent aggregates of the two paths agree
// bitwise, so running it doubles as a consistency check.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tetsym/sweeps.hpp"

using namespace tetsym;

int main(int argc, char** argv) {
    std::int64_t n = 20000;
    std::uint64_t seed = 7;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "-n") == 0 && i + 1 < argc) n = std::atoll(argv[++i]);
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
    }

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled (parallel path runs serially)\n");
#endif
    std::printf("%-16s %10s %12s %12s %9s  %s\n", "sweep", "samples", "serial [s]",
                "parallel [s]", "speedup", "aggregates");

    bool all_ok = true;
    for (SweepKind k : kAllSweeps) {
        std::int64_t ns = std::min<std::int64_t>(n, default_samples(k));
        SweepReport ser = run_sweep_reference(k, ns, seed);
        SweepReport par = run_sweep(k, ns, seed);

        bool ok = ser.samples == par.samples && ser.attempts == par.attempts &&
                  ser.checks.size() == par.checks.size();
        for (std::size_t i = 0; ok && i < ser.checks.size(); ++i)
            ok = ser.checks[i].max_residual == par.checks[i].max_residual &&
                 ser.checks[i].violations == par.checks[i].violations;
        all_ok = all_ok && ok && ser.pass() && par.pass();

        std::printf("%-16s %10" PRId64 " %12.3f %12.3f %8.2fx  %s\n", sweep_name(k), ns,
                    ser.wall_seconds, par.wall_seconds,
                    par.wall_seconds > 0 ? ser.wall_seconds / par.wall_seconds : 0.0,
                    ok ? "match" : "MISMATCH");
    }
    return all_ok ? 0 : 1;
}
