#include "tetsym/json_io.hpp"

#include <fstream>

#include "tetsym/errors.hpp"

namespace tetsym {

namespace {

double get_number(const json& j, const char* what) {
    if (!j.is_number()) throw Error(std::string("input: ") + what + " must be a number");
    return j.get<double>();
}

Vec3 get_vec3(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw Error(std::string("input: ") + what + " must be an array of 3 numbers");
    return {get_number(j[0], what), get_number(j[1], what), get_number(j[2], what)};
}

} // namespace

ParsedInput parse_input(const json& j) {
    if (!j.is_object()) throw Error("input: top level must be a JSON object");
    ParsedInput in;
    int sources = 0;

    if (j.contains("vertices")) {
        const json& v = j["vertices"];
        if (!v.is_array() || v.size() != 4)
            throw Error("input: \"vertices\" must be an array of 4 points");
        std::array<Vec3, 4> pts;
        for (int i = 0; i < 4; ++i) pts[std::size_t(i)] = get_vec3(v[std::size_t(i)], "vertex");
        in.vertices = pts;
        ++sources;
    }
    if (j.contains("edges")) {
        const json& e = j["edges"];
        const char* keys[6] = {"e01", "e02", "e03", "e12", "e13", "e23"};
        double val[6];
        for (int k = 0; k < 6; ++k) {
            if (!e.contains(keys[k])) throw Error(std::string("input: edges missing ") + keys[k]);
            val[k] = get_number(e[keys[k]], keys[k]);
        }
        in.edges = EdgeLengths(val[0], val[1], val[2], val[3], val[4], val[5]);
        ++sources;
    }
    if (j.contains("reversible")) {
        const json& r = j["reversible"];
        for (const char* k : {"a", "b", "c", "d"})
            if (!r.contains(k)) throw Error(std::string("input: reversible missing ") + k);
        in.reversible = ReversibleParams(get_number(r["a"], "a"), get_number(r["b"], "b"),
                                         get_number(r["c"], "c"), get_number(r["d"], "d"));
        ++sources;
    }
    if (j.contains("facets")) {
        const json& f = j["facets"];
        if (!f.is_array() || f.size() != 4)
            throw Error("input: \"facets\" must be an array of 4 records");
        std::array<FacetRecord, 4> rec;
        for (int i = 0; i < 4; ++i) {
            const json& r = f[std::size_t(i)];
            if (!r.contains("normal") || !r.contains("area"))
                throw Error("input: facet record needs \"normal\" and \"area\"");
            rec[std::size_t(i)].normal = get_vec3(r["normal"], "normal");
            rec[std::size_t(i)].area = get_number(r["area"], "area");
        }
        in.facets = FacetData(rec);
        ++sources;
    }

    if (sources != 1)
        throw Error("input: exactly one of \"vertices\", \"edges\", \"reversible\", \"facets\" required");
    return in;
}

ParsedInput parse_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("input: cannot open file " + path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw Error(std::string("input: JSON parse failure: ") + e.what());
    }
    return parse_input(j);
}

json vertices_to_json(const Tetrahedron& t) {
    json v = json::array();
    for (int i = 0; i < 4; ++i)
        v.push_back(json::array({t.v(i).x, t.v(i).y, t.v(i).z}));
    return json{{"vertices", v}};
}

json edges_to_json(const EdgeLengths& l) {
    return json{{"edges",
                 {{"e01", l.e01}, {"e02", l.e02}, {"e03", l.e03},
                  {"e12", l.e12}, {"e13", l.e13}, {"e23", l.e23}}}};
}

json facet_data_to_json(const FacetData& d) {
    json f = json::array();
    for (int i = 0; i < 4; ++i) {
        const auto& r = d[i];
        f.push_back(json{{"normal", json::array({r.normal.x, r.normal.y, r.normal.z})},
                         {"area", r.area}});
    }
    return json{{"facets", f}};
}

json classification_to_json(const Classification& c) {
    json pairings = json::array();
    for (const auto& pc : c.pairings) {
        pairings.push_back(json{
            {"pairs", json::array({json::array({pc.pairs[0][0], pc.pairs[0][1]}),
                                   json::array({pc.pairs[1][0], pc.pairs[1][1]})})},
            {"congruent", pc.congruent},
            {"congruence_residual", json::array({pc.congruence_residual[0], pc.congruence_residual[1]})},
            {"area_residual", json::array({pc.area_residual[0], pc.area_residual[1]})},
        });
    }
    return json{
        {"verdict", verdict_name(c.verdict)},
        {"tolerance", c.tolerance},
        {"regular_residual", c.regular_residual},
        {"opposite_pair_residuals", json::array({c.opposite_pair_residuals[0],
                                                 c.opposite_pair_residuals[1],
                                                 c.opposite_pair_residuals[2]})},
        {"pairings", pairings},
        {"passing", c.passing},
    };
}

json sweep_report_to_json(const SweepReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(json{
            {"name", c.name},
            {"bound", c.bound},
            {"max_residual", c.max_residual},
            {"mean_residual", c.mean_residual},
            {"violations", c.violations},
            {"pass", c.pass},
        });
    }
    return json{
        {"sweep", r.name},
        {"seed", r.seed},
        {"samples", r.samples},
        {"attempts", r.attempts},
        {"checks", checks},
        {"pass", r.pass()},
    };
}

json reconstruction_to_json(const ReconstructionReport& r) {
    json out = vertices_to_json(r.tetrahedron);
    out["report"] = {
        {"input_closure_residual", r.input_closure_residual},
        {"roundtrip_normal_error_rad", r.roundtrip_normal_error},
        {"roundtrip_area_error_rel", r.roundtrip_area_error},
        {"areas_repaired", r.areas_repaired},
        {"columns_swapped", r.columns_swapped},
    };
    out["volume"] = volume_from_vertices(r.tetrahedron);
    return out;
}

} // namespace tetsym
