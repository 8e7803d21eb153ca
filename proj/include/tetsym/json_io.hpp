#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tetsym/heron.hpp"
#include "tetsym/minkowski.hpp"
#include "tetsym/sweeps.hpp"
#include "tetsym/tetra.hpp"

// JSON schema, one object per core type:
//   {"vertices": [[x,y,z] x4]}
//   {"edges": {"e01":..,"e02":..,"e03":..,"e12":..,"e13":..,"e23":..}}
//   {"reversible": {"a":..,"b":..,"c":..,"d":..}}
//   {"facets": [{"normal":[x,y,z],"area":..} x4]}
// Output numbers use the shortest representation that round-trips to the
// same double, so emitted files re-parse losslessly.

namespace tetsym {

using json = nlohmann::ordered_json;

struct ParsedInput {
    std::optional<std::array<Vec3, 4>> vertices;
    std::optional<EdgeLengths> edges;
    std::optional<ReversibleParams> reversible;
    std::optional<FacetData> facets;
};

// Accepts exactly one of the schema keys; throws Error on malformed input.
ParsedInput parse_input(const json& j);
ParsedInput parse_input_file(const std::string& path);

json vertices_to_json(const Tetrahedron& t);
json edges_to_json(const EdgeLengths& l);
json facet_data_to_json(const FacetData& d);
json classification_to_json(const Classification& c);
json reconstruction_to_json(const ReconstructionReport& r);

// Wall time is deliberately left out: identical job specifications must
// serialize to byte-identical reports.
json sweep_report_to_json(const SweepReport& r);

} // namespace tetsym
