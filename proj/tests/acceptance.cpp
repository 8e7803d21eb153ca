// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Criterion 1 drives the installed CLI binary (TETSYM_BIN); the rest
// exercise the library directly at the stated sample counts and tolerances.

#include <array>
#include <chrono>
#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "tetsym/heron.hpp"
#include "tetsym/minkowski.hpp"
#include "tetsym/rng.hpp"
#include "tetsym/sweeps.hpp"
#include "tetsym/tetra.hpp"

using namespace tetsym;
using nlohmann::ordered_json;

namespace {

int g_failures = 0;

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void report(int id, bool pass, const char* title, const std::string& detail) {
    std::printf("[%2d] %s  %s (%s)\n", id, pass ? "PASS" : "FAIL", title, detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

const CheckResult& check_named(const SweepReport& r, const char* name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    std::fprintf(stderr, "missing check %s in sweep %s\n", name, r.name.c_str());
    std::exit(2);
}

// 1. Regular tetrahedron pin through the CLI: every method returns sqrt(2)/12
//    within 1e-12 absolute, in under a second.
void criterion_1() {
    const char* bin = std::getenv("TETSYM_BIN");
    if (!bin) {
        report(1, false, "regular pin via CLI", "TETSYM_BIN not set");
        return;
    }
    double t0 = now();
    std::string cmd = std::string(bin) + " volume --reversible 1,1,1,1 --json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    if (pipe) {
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
        pclose(pipe);
    }
    double dt = now() - t0;

    bool pass = true;
    double worst = 0.0;
    try {
        ordered_json j = ordered_json::parse(out);
        const double expect = 0.11785113019775793; // sqrt(2)/12
        for (const char* m : {"vertex_determinant", "cayley_menger", "closed_form"}) {
            double dev = std::abs(j["V"][m].get<double>() - expect);
            worst = std::max(worst, dev);
            pass = pass && dev <= 1e-12;
        }
    } catch (const std::exception&) {
        pass = false;
    }
    pass = pass && dt < 1.0;
    report(1, pass, "regular pin: CLI volume --reversible 1,1,1,1, all three methods",
           fmt("max |V - sqrt(2)/12| = %.3e <= 1e-12, %.2f s < 1 s", worst, dt));
}

// 2. Volume formula vs both oracles on 1e5 realizable parameter sets.
void criterion_2() {
    double t0 = now();
    SweepReport r = run_sweep(SweepKind::VolumeFormula, 100000, 7);
    double dt = now() - t0;
    const CheckResult& c = check_named(r, "cross_method");
    bool pass = c.pass && r.pass() && dt < 10.0;
    report(2, pass, "volume formula vs vertex-determinant and Cayley-Menger, 1e5 samples",
           fmt("max rel discrepancy %.3e <= 1e-9, %.2f s < 10 s", c.max_residual, dt));
}

// 3. Isosceles reduction at c = d on 1e4 random triples.
void criterion_3() {
    double t0 = now();
    SampleRng rng(21);
    double worst = 0.0;
    int done = 0;
    while (done < 10000) {
        double a = rng.log_uniform(0.1, 10.0);
        double b = rng.log_uniform(0.1, 10.0);
        double c = rng.log_uniform(0.1, 10.0);
        double s[3] = {a, b, c};
        std::sort(s, s + 3);
        if (s[0] + s[1] <= s[2]) continue;
        ++done;
        double rev = reversible_volume_sq(ReversibleParams(a, b, c, c));
        double iso = isosceles_volume_sq(a, b, c);
        worst = std::max(worst, rel_residual_vol_sq(rev, iso, s[2]));
    }
    double dt = now() - t0;
    bool pass = worst <= 1e-13 && dt < 1.0;
    report(3, pass, "reversible(a,b,c,c) equals isosceles(a,b,c), 1e4 samples",
           fmt("max rel %.3e <= 1e-13, %.2f s < 1 s", worst, dt));
}

// 4. Theorem: paired areas imply congruent facet pairs, 1e4 generated samples.
void criterion_4() {
    double t0 = now();
    SweepReport r = run_sweep(SweepKind::Theorem2, 10000, 7);
    double dt = now() - t0;
    const CheckResult& verdict = check_named(r, "verdict_reversible");
    const CheckResult& cong = check_named(r, "facet_congruence");
    bool pass = verdict.violations == 0 && cong.pass && r.pass() && dt < 30.0;
    report(4, pass, "paired-area generator: all 1e4 samples reversible-or-stronger",
           fmt("counterexamples %" PRId64 ", max congruence rel %.3e <= 1e-7, %.2f s < 30 s",
               verdict.violations, cong.max_residual, dt));
}

// 5. Corollary: equiareal instances have four mutually congruent facets.
void criterion_5() {
    SweepReport r = run_sweep(SweepKind::Corollary3, 1000, 11);
    const CheckResult& cong = check_named(r, "mutual_congruence");
    bool pass = cong.pass && r.pass();
    report(5, pass, "equiareal generator: all four facets congruent, 1e3 samples",
           fmt("max congruence rel %.3e <= 1e-7, violations %" PRId64, cong.max_residual,
               cong.violations));
}

// 6. Reconstruction round trip and uniqueness on 1e4 random tetrahedra.
void criterion_6() {
    SweepReport r = run_sweep(SweepKind::Roundtrip, 10000, 5);
    const CheckResult& nrm = check_named(r, "normal_error_rad");
    const CheckResult& area = check_named(r, "area_error");
    const CheckResult& uniq = check_named(r, "uniqueness");
    bool pass = nrm.pass && area.pass && uniq.violations == 0 && r.pass();
    report(6, pass, "facet data -> reconstruct -> facet data, 1e4 samples",
           fmt("normals %.3e rad <= 1e-8, areas %.3e <= 1e-8, uniqueness failures %" PRId64,
               nrm.max_residual, area.max_residual, uniq.violations));
}

// 7. Zero volume and correct flag on both degeneracy manifolds.
void criterion_7() {
    SweepReport r = run_sweep(SweepKind::Degeneracy, 1000, 3);
    const CheckResult& pv = check_named(r, "parallelogram_vol_sq");
    const CheckResult& pf = check_named(r, "parallelogram_flag");
    const CheckResult& tv = check_named(r, "trapezoid_vol_sq");
    const CheckResult& tf = check_named(r, "trapezoid_flag");
    bool pass = pv.pass && pf.violations == 0 && tv.pass && tf.violations == 0 && r.pass();
    report(7, pass, "degeneracy manifolds: |V^2| <= 1e-12 L^6 with matching flags, 1e3 each",
           fmt("parallelogram %.3e, trapezoid %.3e, flag misses %" PRId64 "+%" PRId64,
               pv.max_residual, tv.max_residual, pf.violations, tf.violations));
}

// 8. Regge actions preserve volume and reversibility, and are involutions.
void criterion_8() {
    SweepReport r = run_sweep(SweepKind::Regge, 10000, 9);
    const CheckResult& cm = check_named(r, "cm_preserved");
    const CheckResult& inv = check_named(r, "involution");
    const CheckResult& cls = check_named(r, "verdict_preserved");
    bool pass = cm.pass && inv.pass && cls.violations == 0 && r.pass();
    report(8, pass, "Regge actions: volume and reversibility preserved, involutive, 1e4 samples",
           fmt("CM rel %.3e <= 1e-9, involution %.3e <= 1e-12, verdict breaks %" PRId64,
               cm.max_residual, inv.max_residual, cls.violations));
}

// 9. Heron pins: (3,4,5) exact, needle non-negative.
void criterion_9() {
    double a345 = heron_triangle_area(3, 4, 5);
    double needle = heron_triangle_area(1.0, 1.0, 2.0 - 1e-12);
    bool pass = std::abs(a345 - 6.0) <= 1e-12 && needle >= 0.0 && std::isfinite(needle);
    report(9, pass, "Heron pins: area(3,4,5) = 6, needle (1,1,2-1e-12) non-negative",
           fmt("|area-6| = %.3e <= 1e-12, needle area %.3e >= 0", std::abs(a345 - 6.0), needle));
}

// 10. Perimeter pairing: constructed solutions of the perimeter equations
//     exhibit the implied opposite-edge equalities.
void criterion_10() {
    SweepReport r = run_sweep(SweepKind::Perimeter, 1000, 13);
    const CheckResult& imp = check_named(r, "implied_equalities");
    bool pass = imp.pass && r.pass();
    report(10, pass, "paired perimeters imply opposite-edge equalities, 1e3 edge sets",
           fmt("max implied-equality rel %.3e <= 1e-12, violations %" PRId64, imp.max_residual,
               imp.violations));
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    std::printf("%d/10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
