#include "tetsym/sweeps.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>

#include "tetsym/errors.hpp"
#include "tetsym/heron.hpp"
#include "tetsym/minkowski.hpp"
#include "tetsym/rng.hpp"
#include "tetsym/tetra.hpp"

namespace tetsym {

namespace {

constexpr int kMaxChecks = 6;
constexpr std::int64_t kChunk = 512;
constexpr int kResampleBound = 1000;

struct SampleResult {
    std::array<double, kMaxChecks> residual{};
    std::int64_t attempts = 1;
    bool errored = false;
};

struct CheckSpec {
    const char* name;
    double bound;
};

using KernelFn = void (*)(std::uint64_t seed, std::int64_t index, SampleResult& out);

struct SweepDef {
    SweepKind kind;
    const char* name;
    std::int64_t default_n;
    int ncheck;  // excluding the implicit sample_errors check
    std::array<CheckSpec, kMaxChecks - 1> checks;
    KernelFn kernel;
};

// --- shared sampling helpers -----------------------------------------------

ReversibleParams sample_realizable(SampleRng& rng, std::int64_t& attempts) {
    for (int k = 0; k < kResampleBound; ++k) {
        ++attempts;
        double a = rng.log_uniform(0.1, 10.0);
        double b = rng.log_uniform(0.1, 10.0);
        double c = rng.log_uniform(0.1, 10.0);
        double d = rng.log_uniform(0.1, 10.0);
        if (!satisfies_triangle_inequality(a, b, c) || !satisfies_triangle_inequality(a, b, d))
            continue;
        ReversibleParams p(a, b, c, d);
        auto v = realizability(p);
        if (v.realizable && v.kind == DegeneracyKind::None) return p;
    }
    throw GenerationFailed("sample_realizable: rejection bound exhausted");
}

std::array<double, 3> sample_valid_triple(SampleRng& rng, std::int64_t& attempts) {
    for (int k = 0; k < kResampleBound; ++k) {
        ++attempts;
        double a = rng.log_uniform(0.1, 10.0);
        double b = rng.log_uniform(0.1, 10.0);
        double c = rng.log_uniform(0.1, 10.0);
        double s[3] = {a, b, c};
        std::sort(s, s + 3);
        if (s[0] + s[1] > s[2] * (1.0 + 1e-9)) return {a, b, c};
    }
    throw GenerationFailed("sample_valid_triple: rejection bound exhausted");
}

Tetrahedron sample_box_tetrahedron(SampleRng& rng, std::int64_t& attempts) {
    for (int k = 0; k < kResampleBound; ++k) {
        ++attempts;
        try {
            return Tetrahedron(rng.in_box(10.0), rng.in_box(10.0), rng.in_box(10.0),
                               rng.in_box(10.0));
        } catch (const DegenerateTetrahedron&) {
        }
    }
    throw GenerationFailed("sample_box_tetrahedron: rejection bound exhausted");
}

// --- kernels ----------------------------------------------------------------

void theorem2_kernel(std::uint64_t seed, std::int64_t i, SampleResult& out) {
    Tetrahedron t = generate_paired_area(derive_stream_seed(seed, std::uint64_t(i)), 1.0);
    FacetData d = facet_data(t);
    out.residual[0] = closure_residual(d);
    out.residual[1] = std::max(rel_residual(d[0].area, d[1].area),
                               rel_residual(d[2].area, d[3].area));
    Classification cls = classify(t, 1e-7);
    out.residual[2] = at_least(cls.verdict, Verdict::Reversible) ? 0.0 : 1.0;
    const PairingCheck& pc = cls.pairings[0]; // the generator's pairing
    out.residual[3] = std::max(pc.congruence_residual[0], pc.congruence_residual[1]);
}

void corollary3_kernel(std::uint64_t seed, std::int64_t i, SampleResult& out) {
    Tetrahedron t = generate_equiareal(derive_stream_seed(seed, std::uint64_t(i)), 1.0);
    FacetData d = facet_data(t);
    out.residual[0] = closure_residual(d);
    double eq = 0.0;
    for (int k = 1; k < 4; ++k) eq = std::max(eq, rel_residual(d[0].area, d[k].area));
    out.residual[1] = eq;
    Classification cls = classify(t, 1e-7);
    out.residual[2] = at_least(cls.verdict, Verdict::Isosceles) ? 0.0 : 1.0;
    EdgeLengths l = edge_lengths(t);
    double cong = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            cong = std::max(cong, triangle_congruence_residual(l.facet_sides(a), l.facet_sides(b)));
    out.residual[3] = cong;
}

void volume_formula_kernel(std::uint64_t seed, std::int64_t i, SampleResult& out) {
    SampleRng rng(seed, std::uint64_t(i));
    out.attempts = 0;
    ReversibleParams p = sample_realizable(rng, out.attempts);
    double scale = p.max_length();

    Tetrahedron t = build_reversible(p);
    double vv = volume_from_vertices(t);
    double vv2 = vv * vv;
    double cm = cayley_menger_volume_sq(edge_set(p));
    double cf = reversible_volume_sq(p);
    out.residual[0] = std::max({rel_residual_vol_sq(cf, vv2, scale),
                                rel_residual_vol_sq(cf, cm, scale),
                                rel_residual_vol_sq(vv2, cm, scale)});
    out.residual[1] = rel_residual_vol_sq(cf, reversible_volume_sq_factored(p), scale);

    auto tri = sample_valid_triple(rng, out.attempts);
    double iso = isosceles_volume_sq(tri[0], tri[1], tri[2]);
    double red = reversible_volume_sq(ReversibleParams(tri[0], tri[1], tri[2], tri[2]));
    out.residual[2] = rel_residual_vol_sq(red, iso, std::max({tri[0], tri[1], tri[2]}));

    double lam = rng.uniform(0.25, 4.0);
    double lam6 = lam * lam * lam * lam * lam * lam;
    double scaled = reversible_volume_sq(
        ReversibleParams(lam * p.a, lam * p.b, lam * p.c, lam * p.d));
    out.residual[3] = rel_residual_vol_sq(scaled, lam6 * cf, lam * scale);
}

void regge_kernel(std::uint64_t seed, std::int64_t i, SampleResult& out) {
    SampleRng rng(seed, std::uint64_t(i));
    out.attempts = 0;
    ReversibleParams p = sample_realizable(rng, out.attempts);
    double cm0 = cayley_menger_volume_sq(edge_set(p));
    auto f0 = reversible_volume_factors(p);
    std::sort(f0.begin(), f0.end());

    for (ReggeAction action : kReggeActions) {
        ReversibleParams q = p;
        try {
            q = regge_transform(p, action);
        } catch (const Error&) {
            continue; // inapplicable action; the claims quantify over applicable ones
        }
        double scale = std::max(p.max_length(), q.max_length());
        double cm1 = cayley_menger_volume_sq(edge_set(q));
        out.residual[0] = std::max(out.residual[0], rel_residual_vol_sq(cm0, cm1, scale));

        ReversibleParams r = regge_transform(q, action);
        double inv = std::max({rel_residual(r.a, p.a), rel_residual(r.b, p.b),
                               rel_residual(r.c, p.c), rel_residual(r.d, p.d)});
        out.residual[1] = std::max(out.residual[1], inv);

        RealizabilityVerdict rq = realizability(q);
        if (rq.realizable && rq.kind == DegeneracyKind::None) {
            Classification cls = classify(build_reversible(q), 1e-7);
            if (!at_least(cls.verdict, Verdict::Reversible)) out.residual[2] = 1.0;
        }

        // The action permutes the three factors of the split form.
        auto f1 = reversible_volume_factors(q);
        std::sort(f1.begin(), f1.end());
        double s2 = scale * scale;
        for (int k = 0; k < 3; ++k)
            out.residual[3] = std::max(out.residual[3], std::abs(f0[std::size_t(k)] - f1[std::size_t(k)]) / s2);
    }
}

void degeneracy_kernel(std::uint64_t seed, std::int64_t i, SampleResult& out) {
    SampleRng rng(seed, std::uint64_t(i));
    out.attempts = 0;

    // Point on the parallelogram manifold: c^2 + d^2 = 2a^2 + 2b^2.
    for (int k = 0;; ++k) {
        if (k >= kResampleBound) throw GenerationFailed("degeneracy: parallelogram sampling");
        ++out.attempts;
        double a = rng.log_uniform(0.1, 10.0);
        double b = rng.log_uniform(0.1, 10.0);
        double theta = rng.uniform(0.05, M_PI / 2.0 - 0.05);
        double s = std::sqrt(2.0 * a * a + 2.0 * b * b);
        double c = s * std::cos(theta), d = s * std::sin(theta);
        if (!satisfies_triangle_inequality(a, b, c) || !satisfies_triangle_inequality(a, b, d))
            continue;
        ReversibleParams p(a, b, c, d);
        double l = p.max_length();
        double l6 = l * l * l * l * l * l;
        out.residual[0] = std::abs(reversible_volume_sq(p)) / l6;
        DegeneracyKind kind = realizability(p).kind;
        out.residual[1] = (kind == DegeneracyKind::Parallelogram || kind == DegeneracyKind::Both)
                              ? 0.0 : 1.0;
        break;
    }

    // Point on the trapezoid manifold: (b^2 - a^2)^2 = c^2 d^2.
    for (int k = 0;; ++k) {
        if (k >= kResampleBound) throw GenerationFailed("degeneracy: trapezoid sampling");
        ++out.attempts;
        double a = rng.log_uniform(0.1, 10.0);
        double b = rng.log_uniform(0.1, 10.0);
        double c = rng.log_uniform(0.1, 10.0);
        double d = std::abs(b * b - a * a) / c;
        if (!(d > 0.0) || !std::isfinite(d)) continue;
        if (!satisfies_triangle_inequality(a, b, c) || !satisfies_triangle_inequality(a, b, d))
            continue;
        ReversibleParams p(a, b, c, d);
        double l = p.max_length();
        double l6 = l * l * l * l * l * l;
        out.residual[2] = std::abs(reversible_volume_sq(p)) / l6;
        DegeneracyKind kind = realizability(p).kind;
        out.residual[3] = (kind == DegeneracyKind::Trapezoid || kind == DegeneracyKind::Both)
                              ? 0.0 : 1.0;
        break;
    }
}

void roundtrip_kernel(std::uint64_t seed, std::int64_t i, SampleResult& out) {
    SampleRng rng(seed, std::uint64_t(i));
    out.attempts = 0;
    Tetrahedron t = sample_box_tetrahedron(rng, out.attempts);
    FacetData d = facet_data(t);
    ReconstructionReport rep = reconstruct(d);
    out.residual[0] = rep.roundtrip_normal_error;
    out.residual[1] = rep.roundtrip_area_error;
    Tetrahedron origin = t.translated(-1.0 * t.v(0));
    out.residual[2] = uniqueness_check(d, rep.tetrahedron, origin) ? 0.0 : 1.0;
    out.residual[3] = closure_residual(d);
    double v = volume_from_vertices(t);
    out.residual[4] =
        rel_residual_vol_sq(v * v, cayley_menger_volume_sq(edge_lengths(t)), longest_edge(t));
}

void perimeter_kernel(std::uint64_t seed, std::int64_t i, SampleResult& out) {
    SampleRng rng(seed, std::uint64_t(i));
    out.attempts = 0;

    // Edge set solving the two perimeter equations of pairing 0 for
    // (e12, e13); the 2x2 solve is its own oracle for the implied
    // opposite-edge equalities.
    for (int k = 0;; ++k) {
        if (k >= kResampleBound) throw GenerationFailed("perimeter: edge construction");
        ++out.attempts;
        double e01 = rng.log_uniform(0.5, 2.0);
        double e02 = rng.log_uniform(0.5, 2.0);
        double e03 = rng.log_uniform(0.5, 2.0);
        double e23 = rng.log_uniform(0.5, 2.0);
        // [1 1; -1 1] (e12 e13)^t = (e02+e03, e02-e03)^t, det = 2
        double rhs1 = e02 + e03, rhs2 = e02 - e03;
        double e12 = (rhs1 - rhs2) / 2.0;
        double e13 = (rhs1 + rhs2) / 2.0;
        if (!satisfies_triangle_inequality(e12, e13, e23) ||
            !satisfies_triangle_inequality(e02, e03, e23) ||
            !satisfies_triangle_inequality(e01, e03, e13) ||
            !satisfies_triangle_inequality(e01, e02, e12))
            continue;
        EdgeLengths l(e01, e02, e03, e12, e13, e23);
        PerimeterImplication imp = perimeter_pairing_implication(l, 0);
        out.residual[0] = imp.perimeter_residual;
        out.residual[1] = std::max(imp.implied_residuals[0], imp.implied_residuals[1]);
        break;
    }

    // Perimeter remark on a built reversible instance: a facet pair has
    // equal perimeters exactly when it is congruent.
    ReversibleParams p = sample_realizable(rng, out.attempts);
    Tetrahedron t = build_reversible(p);
    EdgeLengths l = edge_lengths(t);
    Classification cls = classify(t, 1e-9);
    auto per = facet_perimeters(l);
    double mismatch = 0.0;
    for (const auto& pc : cls.pairings) {
        for (int q = 0; q < 2; ++q) {
            bool cong = pc.congruence_residual[std::size_t(q)] <= 1e-9;
            bool peq = rel_residual(per[std::size_t(pc.pairs[std::size_t(q)][0])],
                                    per[std::size_t(pc.pairs[std::size_t(q)][1])]) <= 1e-12;
            if (cong != peq) mismatch = 1.0;
        }
    }
    out.residual[2] = mismatch;
}

// --- sweep table -------------------------------------------------------------

constexpr SweepDef kSweeps[] = {
    {SweepKind::Theorem2, "theorem2", 10000, 4,
     {{{"closure_residual", 1e-10},
       {"paired_areas", 1e-10},
       {"verdict_reversible", 0.0},
       {"facet_congruence", 1e-7}}},
     theorem2_kernel},
    {SweepKind::Corollary3, "corollary3", 1000, 4,
     {{{"closure_residual", 1e-10},
       {"equal_areas", 1e-10},
       {"verdict_isosceles", 0.0},
       {"mutual_congruence", 1e-7}}},
     corollary3_kernel},
    {SweepKind::VolumeFormula, "volume-formula", 100000, 4,
     {{{"cross_method", 1e-9},
       {"factorizations_agree", 1e-12},
       {"isosceles_reduction", 1e-13},
       {"homogeneity", 1e-12}}},
     volume_formula_kernel},
    {SweepKind::Regge, "regge", 10000, 4,
     {{{"cm_preserved", 1e-9},
       {"involution", 1e-12},
       {"verdict_preserved", 0.0},
       {"factor_permutation", 1e-12}}},
     regge_kernel},
    {SweepKind::Degeneracy, "degeneracy", 1000, 4,
     {{{"parallelogram_vol_sq", 1e-12},
       {"parallelogram_flag", 0.0},
       {"trapezoid_vol_sq", 1e-12},
       {"trapezoid_flag", 0.0}}},
     degeneracy_kernel},
    {SweepKind::Roundtrip, "roundtrip", 10000, 5,
     {{{"normal_error_rad", 1e-8},
       {"area_error", 1e-8},
       {"uniqueness", 0.0},
       {"closure_residual", 1e-12},
       {"volume_oracle_agreement", 1e-9}}},
     roundtrip_kernel},
    {SweepKind::Perimeter, "perimeter", 1000, 3,
     {{{"constructed_perimeters", 1e-12},
       {"implied_equalities", 1e-12},
       {"congruence_perimeter_match", 0.0},
       {"", 0.0},
       {"", 0.0}}},
     perimeter_kernel},
};

const SweepDef& def_for(SweepKind k) {
    for (const auto& d : kSweeps)
        if (d.kind == k) return d;
    return kSweeps[0];
}

struct Accum {
    std::array<double, kMaxChecks> maxv{};
    std::array<double, kMaxChecks> sum{};
    std::array<std::int64_t, kMaxChecks> violations{};
    std::int64_t attempts = 0;
    std::int64_t samples = 0;
    std::int64_t errors = 0;

    void add(const SweepDef& def, const SampleResult& r) {
        ++samples;
        attempts += r.attempts;
        if (r.errored) {
            ++errors;
            return;
        }
        for (int k = 0; k < def.ncheck; ++k) {
            double v = r.residual[std::size_t(k)];
            maxv[std::size_t(k)] = std::max(maxv[std::size_t(k)], v);
            sum[std::size_t(k)] += v;
            if (v > def.checks[std::size_t(k)].bound) ++violations[std::size_t(k)];
        }
    }

    void merge(const SweepDef& def, const Accum& o) {
        samples += o.samples;
        attempts += o.attempts;
        errors += o.errors;
        for (int k = 0; k < def.ncheck; ++k) {
            maxv[std::size_t(k)] = std::max(maxv[std::size_t(k)], o.maxv[std::size_t(k)]);
            sum[std::size_t(k)] += o.sum[std::size_t(k)];
            violations[std::size_t(k)] += o.violations[std::size_t(k)];
        }
    }
};

void run_one(const SweepDef& def, std::uint64_t seed, std::int64_t i, Accum& acc) {
    SampleResult r;
    try {
        def.kernel(seed, i, r);
    } catch (const std::exception&) {
        r.errored = true;
    }
    acc.add(def, r);
}

SweepReport assemble(const SweepDef& def, std::uint64_t seed, std::int64_t n, const Accum& acc,
                     double wall) {
    SweepReport rep;
    rep.name = def.name;
    rep.seed = seed;
    rep.samples = acc.samples;
    rep.attempts = acc.attempts;
    rep.wall_seconds = wall;
    std::int64_t good = std::max<std::int64_t>(1, acc.samples - acc.errors);
    for (int k = 0; k < def.ncheck; ++k) {
        CheckResult c;
        c.name = def.checks[std::size_t(k)].name;
        c.bound = def.checks[std::size_t(k)].bound;
        c.max_residual = acc.maxv[std::size_t(k)];
        c.mean_residual = acc.sum[std::size_t(k)] / double(good);
        c.violations = acc.violations[std::size_t(k)];
        c.pass = c.violations == 0;
        rep.checks.push_back(c);
    }
    CheckResult errs;
    errs.name = "sample_errors";
    errs.bound = 0.0;
    errs.max_residual = acc.errors > 0 ? 1.0 : 0.0;
    errs.mean_residual = double(acc.errors) / double(std::max<std::int64_t>(1, n));
    errs.violations = acc.errors;
    errs.pass = acc.errors == 0;
    rep.checks.push_back(errs);
    return rep;
}

} // namespace

bool SweepReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::optional<SweepKind> sweep_kind_from_name(std::string_view name) {
    for (const auto& d : kSweeps)
        if (name == d.name) return d.kind;
    return std::nullopt;
}

const char* sweep_name(SweepKind k) { return def_for(k).name; }

std::int64_t default_samples(SweepKind k) { return def_for(k).default_n; }

SweepReport run_sweep_reference(SweepKind k, std::int64_t n, std::uint64_t seed) {
    const SweepDef& def = def_for(k);
    auto t0 = std::chrono::steady_clock::now();
    Accum acc;
    for (std::int64_t i = 0; i < n; ++i) run_one(def, seed, i, acc);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return assemble(def, seed, n, acc, wall);
}

SweepReport run_sweep(SweepKind k, std::int64_t n, std::uint64_t seed) {
    const SweepDef& def = def_for(k);
    auto t0 = std::chrono::steady_clock::now();

    std::int64_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<Accum> partial(std::size_t(std::max<std::int64_t>(nchunks, 0)));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t c = 0; c < nchunks; ++c) {
        std::int64_t lo = c * kChunk;
        std::int64_t hi = std::min(n, lo + kChunk);
        Accum& acc = partial[std::size_t(c)];
        for (std::int64_t i = lo; i < hi; ++i) run_one(def, seed, i, acc);
    }

    Accum acc;
    for (const auto& part : partial) acc.merge(def, part);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return assemble(def, seed, n, acc, wall);
}

} // namespace tetsym
