#pragma once

#include "hycone/graphs.hpp"
#include "hycone/hypfamilies.hpp"
#include "hycone/polyhedra.hpp"
#include "json.hpp"

namespace hycone {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings ("p" when integral); plain JSON integers
// are accepted on input.
Rat json_to_rat(const Json& j);
Json rat_to_json(const Rat& x);

DistVec parse_distance(const Json& j);
Json distance_to_json(const DistVec& d);

BInequality parse_bineq(const Json& j);  // validates rhs = s(s+1)
Json bineq_to_json(const BInequality& q);

PolyCone parse_cone(const Json& j);
Json cone_to_json(const PolyCone& c);

std::pair<int, std::vector<QVec>> parse_points(const Json& j);
Json polytope_to_json(const PolyTope& p);

Graph parse_graph(const Json& j);          // 1-based vertices in files
Json graph_to_json(const Graph& g);

PathSystem parse_paths(const Json& j);     // {"terminals":[...],"paths":{"i,j":[...]}}

EdgeIneq parse_edge_ineq(const Json& j, const Graph& g);
Json edge_ineq_to_json(const EdgeIneq& q, const Graph& g);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace hycone
