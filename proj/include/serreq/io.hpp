#pragma once

#include "serreq/formulas.hpp"

// single-header nlohmann/json from vendor/
#include <json.hpp>

namespace serreq {

struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json scalar_to_json(const MotivicScalar& s);
MotivicScalar scalar_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// SymFunc as a list of (partition, scalar) entries grouped by degree n;
/// basis "schur" converts on write/read.
Json symfunc_to_json(const SymFunc& f, const std::string& basis = "powersum");
SymFunc symfunc_from_json(const Json& j, int max_deg, const std::string& basis);

/// series file:
/// { "kind": "series", "max_deg": N, "basis": "powersum"|"schur",
///   "entries": [ { "genus": g, "n": n, "terms": [[partition, scalar], ...] } ] }
Json input_series_to_json(const InputSeries& in, const std::string& basis = "powersum");
InputSeries input_series_from_json(const Json& j, bool allow_support_violation = false);

Json graded_to_json(const GradedSeries& f, const std::string& basis = "powersum");
GradedSeries graded_from_json(const Json& j);

/// graph files: { "vertices": [{"weight": w}, ...], "edges": [[u, v], ...] };
/// torus graphs use edge objects {"ends": [u, v], "class": [c...]}.
Json graph_to_json(const VGraph& g);
VGraph vgraph_from_json(const Json& j);
Json torus_to_json(const TorusGraph& t);
TorusGraph torus_from_json(const Json& j);

Json w2elem_to_json(const W2Elem& w);

InputSeries load_input_series(const std::string& path, bool allow_support_violation = false);
void save_json(const Json& j, const std::string& path);
Json load_json(const std::string& path);

/// human-readable table, one line per (genus, n)
std::string render_table(const GradedSeries& f, const std::string& basis);
std::string render_table(const SymFunc& f, const std::string& basis);

} // namespace serreq
