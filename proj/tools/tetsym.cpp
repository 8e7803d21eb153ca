// Command-line front end: classification, volume evaluation, reconstruction
// from facet data, reversible construction, and invariant sweeps.
//
// Exit codes: 0 success/pass, 1 usage or input parse failure, 2 degenerate
// input, 3 not realizable, 4 closure violation, 5 degenerate normals,
// 6 sweep invariant failure.

#include <cinttypes>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tetsym/errors.hpp"
#include "tetsym/heron.hpp"
#include "tetsym/json_io.hpp"
#include "tetsym/minkowski.hpp"
#include "tetsym/sweeps.hpp"
#include "tetsym/tetra.hpp"

using namespace tetsym;

namespace {

enum ExitCode {
    kOk = 0,
    kUsage = 1,
    kDegenerate = 2,
    kNotRealizable = 3,
    kClosure = 4,
    kBadNormals = 5,
    kSweepFailed = 6,
};

struct InputOpts {
    std::vector<double> edges;
    std::vector<double> vertices;
    std::vector<double> reversible;
    std::vector<double> isosceles;
    std::string facets_file;
    std::string input_file;
    bool json = false;
    double tol_scale = 1.0;

    double classify_tol() const { return kClassifyTol * tol_scale; }
};

void add_input_flags(CLI::App* cmd, InputOpts& in, bool with_facets) {
    cmd->add_option("--edges", in.edges,
                    "six edge lengths e01,e02,e03,e12,e13,e23")
        ->delimiter(',');
    cmd->add_option("--vertices", in.vertices,
                    "twelve coordinates x0,y0,z0,...,x3,y3,z3")
        ->delimiter(',');
    cmd->add_option("--reversible", in.reversible, "reversible parameters a,b,c,d")
        ->delimiter(',');
    cmd->add_option("--isosceles", in.isosceles, "isosceles parameters a,b,c")
        ->delimiter(',');
    if (with_facets)
        cmd->add_option("--facets", in.facets_file, "JSON file with facet normals and areas");
    cmd->add_option("--input", in.input_file, "JSON input file (any schema)");
    cmd->add_flag("--json", in.json, "machine-readable output");
    cmd->add_option("--tol", in.tol_scale,
                    "scale factor applied to all default tolerances")
        ->check(CLI::PositiveNumber);
}

ParsedInput resolve_input(const InputOpts& in) {
    ParsedInput p;
    int sources = 0;
    if (!in.edges.empty()) {
        if (in.edges.size() != 6) throw Error("--edges needs exactly 6 values");
        p.edges = EdgeLengths(in.edges[0], in.edges[1], in.edges[2], in.edges[3], in.edges[4],
                              in.edges[5]);
        ++sources;
    }
    if (!in.vertices.empty()) {
        if (in.vertices.size() != 12) throw Error("--vertices needs exactly 12 values");
        std::array<Vec3, 4> v;
        for (int i = 0; i < 4; ++i)
            v[std::size_t(i)] = Vec3(in.vertices[std::size_t(3 * i)],
                                     in.vertices[std::size_t(3 * i + 1)],
                                     in.vertices[std::size_t(3 * i + 2)]);
        p.vertices = v;
        ++sources;
    }
    if (!in.reversible.empty()) {
        if (in.reversible.size() != 4) throw Error("--reversible needs exactly 4 values");
        p.reversible = ReversibleParams(in.reversible[0], in.reversible[1], in.reversible[2],
                                        in.reversible[3]);
        ++sources;
    }
    if (!in.isosceles.empty()) {
        if (in.isosceles.size() != 3) throw Error("--isosceles needs exactly 3 values");
        p.reversible = ReversibleParams(in.isosceles[0], in.isosceles[1], in.isosceles[2],
                                        in.isosceles[2]);
        ++sources;
    }
    if (!in.facets_file.empty()) {
        ParsedInput f = parse_input_file(in.facets_file);
        if (!f.facets) throw Error("--facets file must use the \"facets\" schema");
        p.facets = f.facets;
        ++sources;
    }
    if (!in.input_file.empty()) {
        ParsedInput f = parse_input_file(in.input_file);
        p = f;
        ++sources;
    }
    if (sources != 1) throw Error("exactly one input source is required");
    return p;
}

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

void print_classification(const Classification& c) {
    std::printf("verdict: %s\n", verdict_name(c.verdict));
    std::printf("  tolerance           : %.3g\n", c.tolerance);
    std::printf("  regular residual    : %.3e\n", c.regular_residual);
    std::printf("  opposite-pair resid.: %.3e %.3e %.3e\n", c.opposite_pair_residuals[0],
                c.opposite_pair_residuals[1], c.opposite_pair_residuals[2]);
    for (const auto& pc : c.pairings) {
        std::printf("  pairing {(f%d,f%d),(f%d,f%d)}: %s  congruence %.3e/%.3e  area %.3e/%.3e\n",
                    pc.pairs[0][0], pc.pairs[0][1], pc.pairs[1][0], pc.pairs[1][1],
                    pc.congruent ? "congruent" : "not congruent", pc.congruence_residual[0],
                    pc.congruence_residual[1], pc.area_residual[0], pc.area_residual[1]);
    }
}

// --- classify ----------------------------------------------------------------

int cmd_classify(const InputOpts& in) {
    ParsedInput p = resolve_input(in);
    double tol = in.classify_tol();

    Classification cls = [&] {
        if (p.vertices) {
            const auto& v = *p.vertices;
            return classify(Tetrahedron(v[0], v[1], v[2], v[3]), tol);
        }
        if (p.edges) return classify_edges(*p.edges, tol);
        if (p.reversible) return classify(build_reversible(*p.reversible), tol);
        return classify(reconstruct(*p.facets).tetrahedron, tol);
    }();

    if (in.json)
        emit(classification_to_json(cls));
    else
        print_classification(cls);
    return kOk;
}

// --- volume ------------------------------------------------------------------

// Reversible pattern of a raw edge set: at least two opposite pairs equal.
std::optional<ReversibleParams> reversible_pattern(const EdgeLengths& l, double tol) {
    std::array<std::array<double, 2>, 3> ops{
        {{l.e01, l.e23}, {l.e02, l.e13}, {l.e03, l.e12}}};
    std::array<bool, 3> eq{};
    int neq = 0;
    for (int k = 0; k < 3; ++k) {
        eq[std::size_t(k)] = rel_residual(ops[std::size_t(k)][0], ops[std::size_t(k)][1]) <= tol;
        if (eq[std::size_t(k)]) ++neq;
    }
    if (neq < 2) return std::nullopt;
    int free_k = 0;
    if (neq == 3) {
        free_k = 2; // isosceles: any pair may play (c,d)
    } else {
        for (int k = 0; k < 3; ++k)
            if (!eq[std::size_t(k)]) free_k = k;
    }
    std::array<double, 2> aa{}, bb{}, cd = ops[std::size_t(free_k)];
    bool first = true;
    for (int k = 0; k < 3; ++k) {
        if (k == free_k) continue;
        (first ? aa : bb) = ops[std::size_t(k)];
        first = false;
    }
    try {
        return ReversibleParams((aa[0] + aa[1]) / 2.0, (bb[0] + bb[1]) / 2.0, cd[0], cd[1]);
    } catch (const Error&) {
        return std::nullopt;
    }
}

int cmd_volume(const InputOpts& in) {
    ParsedInput p = resolve_input(in);
    double tol = in.classify_tol();

    std::optional<double> v_vertex;     // vertex-determinant V
    std::optional<double> v2_cm;        // Cayley-Menger V^2
    std::optional<double> v2_closed;    // closed-form V^2
    std::optional<ReversibleParams> params = p.reversible;
    std::optional<EdgeLengths> edges = p.edges;

    if (p.facets) {
        ReconstructionReport r = reconstruct(*p.facets);
        p.vertices = r.tetrahedron.vertices();
    }
    if (p.vertices) {
        const auto& v = *p.vertices;
        Tetrahedron t = Tetrahedron::allow_degenerate(v[0], v[1], v[2], v[3]);
        v_vertex = volume_from_vertices(t);
        edges = edge_lengths(t);
    }
    if (params) edges = edge_set(*params);
    if (edges) {
        v2_cm = cayley_menger_volume_sq(*edges);
        if (!params) params = reversible_pattern(*edges, tol);
    }
    if (params) {
        v2_closed = reversible_volume_sq(*params);
        if (!v_vertex) {
            auto r = realizability(*params);
            if (!r.realizable)
                throw NotRealizable("volume: closed-form V^2 is negative");
            v_vertex = volume_from_vertices(build_reversible_allow_degenerate(*params));
        }
    }

    double scale = edges ? edges->max_length() : 1.0;
    json methods_v2 = json::object();
    json methods_v = json::object();
    if (v_vertex) {
        methods_v2["vertex_determinant"] = *v_vertex * *v_vertex;
        methods_v["vertex_determinant"] = *v_vertex;
    }
    if (v2_cm) {
        methods_v2["cayley_menger"] = *v2_cm;
        methods_v["cayley_menger"] = *v2_cm >= 0 ? std::sqrt(*v2_cm) : 0.0;
    }
    if (v2_closed) {
        methods_v2["closed_form"] = *v2_closed;
        methods_v["closed_form"] = *v2_closed >= 0 ? std::sqrt(*v2_closed) : 0.0;
    }

    double cross = 0.0;
    std::vector<double> vals;
    for (const auto& [key, val] : methods_v2.items()) vals.push_back(val.get<double>());
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            cross = std::max(cross, rel_residual_vol_sq(vals[i], vals[j], scale));

    json out{{"V_sq", methods_v2}, {"V", methods_v}, {"cross_method_residual", cross}};
    if (params) {
        auto r = realizability(*params);
        auto f = reversible_volume_factors(*params);
        out["closed_form"] = {
            {"params", {{"a", params->a}, {"b", params->b}, {"c", params->c}, {"d", params->d}}},
            {"product_form",
             {{"factor1", r.factor1}, {"factor2", r.factor2},
              {"V_sq", r.factor1 * r.factor2 / 72.0}}},
            {"split_form",
             {{"factors", json::array({f[0], f[1], f[2]})},
              {"V_sq", f[0] * f[1] * f[2] / 72.0}}},
            {"realizable", r.realizable},
            {"degeneracy", degeneracy_name(r.kind)},
        };
    }

    if (in.json) {
        emit(out);
    } else {
        for (const auto& [key, val] : methods_v2.items())
            std::printf("%-18s : V^2 = %.17g   V = %.17g\n", key.c_str(), val.get<double>(),
                        methods_v[key].get<double>());
        std::printf("cross-method residual: %.3e\n", cross);
        if (params) {
            auto r = realizability(*params);
            auto f = reversible_volume_factors(*params);
            std::printf("product form : (1/72) * %.17g * %.17g = %.17g\n", r.factor1, r.factor2,
                        r.factor1 * r.factor2 / 72.0);
            std::printf("split form   : (1/72) * %.17g * %.17g * %.17g = %.17g\n", f[0], f[1],
                        f[2], f[0] * f[1] * f[2] / 72.0);
            std::printf("realizable   : %s (degeneracy: %s)\n", r.realizable ? "yes" : "no",
                        degeneracy_name(r.kind));
        }
    }
    return kOk;
}

// --- reconstruct ---------------------------------------------------------------

int cmd_reconstruct(const InputOpts& in) {
    ParsedInput p = resolve_input(in);
    if (!p.facets) throw Error("reconstruct needs facet data (--facets or --input)");
    ReconstructionReport r = reconstruct(*p.facets);
    if (in.json) {
        emit(reconstruction_to_json(r));
    } else {
        for (int i = 0; i < 4; ++i)
            std::printf("v%d = (%.17g, %.17g, %.17g)\n", i, r.tetrahedron.v(i).x,
                        r.tetrahedron.v(i).y, r.tetrahedron.v(i).z);
        std::printf("volume                : %.17g\n", volume_from_vertices(r.tetrahedron));
        std::printf("input closure residual: %.3e\n", r.input_closure_residual);
        std::printf("roundtrip normal error: %.3e rad\n", r.roundtrip_normal_error);
        std::printf("roundtrip area error  : %.3e\n", r.roundtrip_area_error);
        if (r.areas_repaired) std::printf("note: areas were projected onto the closure subspace\n");
        if (r.columns_swapped) std::printf("note: mirror-labeled input; facets 2,3 exchanged\n");
    }
    return kOk;
}

// --- build ---------------------------------------------------------------------

int cmd_build(const InputOpts& in) {
    ParsedInput p = resolve_input(in);
    if (!p.reversible) throw Error("build needs --reversible or --isosceles parameters");
    Tetrahedron t = build_reversible(*p.reversible);
    if (in.json) {
        json out = vertices_to_json(t);
        // informational copy under a non-schema key, so the object stays a
        // valid single-source input
        out["edge_lengths"] = edges_to_json(edge_lengths(t))["edges"];
        out["volume"] = volume_from_vertices(t);
        emit(out);
    } else {
        for (int i = 0; i < 4; ++i)
            std::printf("v%d = (%.17g, %.17g, %.17g)\n", i, t.v(i).x, t.v(i).y, t.v(i).z);
        std::printf("volume = %.17g\n", volume_from_vertices(t));
    }
    return kOk;
}

// --- sweep -----------------------------------------------------------------------

int cmd_sweep(const std::string& name, std::int64_t samples, std::uint64_t seed, bool json_out,
              bool reference) {
    auto kind = sweep_kind_from_name(name);
    if (!kind) {
        std::fprintf(stderr, "unknown sweep '%s'; known: ", name.c_str());
        for (SweepKind k : kAllSweeps) std::fprintf(stderr, "%s ", sweep_name(k));
        std::fprintf(stderr, "\n");
        return kUsage;
    }
    if (samples <= 0) samples = default_samples(*kind);
    SweepReport rep = reference ? run_sweep_reference(*kind, samples, seed)
                                : run_sweep(*kind, samples, seed);
    if (json_out) {
        emit(sweep_report_to_json(rep));
    } else {
        std::printf("sweep %s: %" PRId64 " samples (%" PRId64 " draws), seed %llu, %.3f s\n",
                    rep.name.c_str(), rep.samples, rep.attempts,
                    static_cast<unsigned long long>(rep.seed), rep.wall_seconds);
        for (const auto& c : rep.checks)
            std::printf("  %-28s max %.3e  mean %.3e  bound %.3e  violations %" PRId64 "  %s\n",
                        c.name.c_str(), c.max_residual, c.mean_residual, c.bound, c.violations,
                        c.pass ? "pass" : "FAIL");
        std::printf("%s\n", rep.pass() ? "PASS" : "FAIL");
    }
    return rep.pass() ? kOk : kSweepFailed;
}

int map_error(const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    if (dynamic_cast<const DegenerateTetrahedron*>(&e)) return kDegenerate;
    if (dynamic_cast<const InvalidTriangle*>(&e)) return kDegenerate;
    if (dynamic_cast<const NotRealizable*>(&e)) return kNotRealizable;
    if (dynamic_cast<const NonPositiveEdge*>(&e)) return kNotRealizable;
    if (dynamic_cast<const ClosureViolation*>(&e)) return kClosure;
    if (dynamic_cast<const DegenerateNormals*>(&e)) return kBadNormals;
    if (dynamic_cast<const SingularMatrix*>(&e)) return kBadNormals;
    return kUsage; // NonPositiveArea, GenerationFailed, schema errors
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tetrahedron facet-symmetry and volume toolkit"};
    app.require_subcommand(1);

    InputOpts cls_in, vol_in, rec_in, build_in;
    CLI::App* c_classify = app.add_subcommand("classify", "facet-congruence classification");
    add_input_flags(c_classify, cls_in, true);
    CLI::App* c_volume = app.add_subcommand("volume", "volume via every applicable method");
    add_input_flags(c_volume, vol_in, true);
    CLI::App* c_reconstruct =
        app.add_subcommand("reconstruct", "tetrahedron from facet normals and areas");
    add_input_flags(c_reconstruct, rec_in, true);
    CLI::App* c_build =
        app.add_subcommand("build", "coordinates of a reversible tetrahedron");
    add_input_flags(c_build, build_in, false);

    std::string sweep_name_arg;
    std::int64_t sweep_n = 0;
    std::uint64_t sweep_seed = 0;
    bool sweep_json = false, sweep_reference = false;
    CLI::App* c_sweep = app.add_subcommand("sweep", "randomized invariant sweep");
    c_sweep->add_option("name", sweep_name_arg, "theorem2|corollary3|volume-formula|regge|degeneracy|roundtrip|perimeter")
        ->required();
    c_sweep->add_option("-n,--samples", sweep_n, "sample count (default per sweep)")
        ->check(CLI::PositiveNumber);
    c_sweep->add_option("--seed", sweep_seed, "RNG seed");
    c_sweep->add_flag("--json", sweep_json, "machine-readable report");
    c_sweep->add_flag("--reference", sweep_reference, "run the serial reference implementation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(cls_in);
        if (c_volume->parsed()) return cmd_volume(vol_in);
        if (c_reconstruct->parsed()) return cmd_reconstruct(rec_in);
        if (c_build->parsed()) return cmd_build(build_in);
        return cmd_sweep(sweep_name_arg, sweep_n, sweep_seed, sweep_json, sweep_reference);
    } catch (const Error& e) {
        return map_error(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    }
}
