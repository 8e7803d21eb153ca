#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Randomized invariant sweeps. Every sweep is a map over an index range:
// sample i is drawn from its own (seed, i) stream, so the result of a sweep
// does not depend on evaluation order. run_sweep() evaluates fixed-size
// chunks of the index range in parallel (OpenMP) and reduces the chunk
// partials in index order, which makes its aggregates independent of the
// thread count; run_sweep_reference() is the plain serial loop kept as the
// reference implementation. Max residuals and violation counts of the two
// agree bitwise; means may differ by summation order at the few-ulp level.

namespace tetsym {

enum class SweepKind {
    Theorem2,       // paired-area generator => congruent facet pairs
    Corollary3,     // equiareal generator   => all four facets congruent
    VolumeFormula,  // closed form vs vertex determinant vs Cayley-Menger
    Regge,          // volume/classification invariance of the edge transform
    Degeneracy,     // zero volume on the parallelogram/trapezoid manifolds
    Roundtrip,      // facet data -> reconstruct -> facet data
    Perimeter,      // paired perimeters force opposite-edge equalities
};

inline constexpr SweepKind kAllSweeps[] = {
    SweepKind::Theorem2, SweepKind::Corollary3, SweepKind::VolumeFormula,
    SweepKind::Regge,    SweepKind::Degeneracy, SweepKind::Roundtrip,
    SweepKind::Perimeter,
};

std::optional<SweepKind> sweep_kind_from_name(std::string_view name);
const char* sweep_name(SweepKind k);
std::int64_t default_samples(SweepKind k);

struct CheckResult {
    std::string name;
    double bound = 0;
    double max_residual = 0;
    double mean_residual = 0;
    std::int64_t violations = 0;
    bool pass = false;
};

struct SweepReport {
    std::string name;
    std::uint64_t seed = 0;
    std::int64_t samples = 0;   // evaluated sample indices
    std::int64_t attempts = 0;  // raw draws including rejection resampling
    std::vector<CheckResult> checks;
    double wall_seconds = 0;

    bool pass() const;
};

SweepReport run_sweep(SweepKind k, std::int64_t n, std::uint64_t seed);
SweepReport run_sweep_reference(SweepKind k, std::int64_t n, std::uint64_t seed);

} // namespace tetsym
