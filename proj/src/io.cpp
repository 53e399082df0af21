#include "hycone/io.hpp"

#include <fstream>

namespace hycone {

Rat json_to_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) {
    auto r = rat_parse(j.get<std::string>());
    if (!r) throw hy_error("malformed rational: " + j.get<std::string>());
    return *r;
  }
  throw hy_error("expected a rational (integer or \"p/q\" string)");
}

Json rat_to_json(const Rat& x) { return rat_str(x); }

DistVec parse_distance(const Json& j) {
  if (!j.contains("n") || !j.contains("d"))
    throw hy_error("distance file needs fields n, d");
  int n = j.at("n").get<int>();
  QVec d;
  for (const Json& v : j.at("d")) d.push_back(json_to_rat(v));
  if (static_cast<long long>(d.size()) != pair_count(n))
    throw hy_error("distance length != C(n,2)");
  return DistVec(n, std::move(d));
}

Json distance_to_json(const DistVec& d) {
  Json out;
  out["n"] = d.n;
  Json arr = Json::array();
  for (const Rat& x : d.d) arr.push_back(rat_to_json(x));
  out["d"] = std::move(arr);
  return out;
}

BInequality parse_bineq(const Json& j) {
  if (!j.contains("n") || !j.contains("b"))
    throw hy_error("inequality file needs fields n, b");
  int n = j.at("n").get<int>();
  BVec b = j.at("b").get<BVec>();
  if (static_cast<int>(b.size()) != n) throw hy_error("b length != n");
  BInequality q(std::move(b));
  if (j.contains("rhs")) {
    Rat rhs = json_to_rat(j.at("rhs"));
    if (rhs != Rat(q.rhs())) throw hy_error("rhs does not equal s(s+1)");
  }
  return q;
}

Json bineq_to_json(const BInequality& q) {
  Json out;
  out["n"] = q.n();
  out["b"] = q.b;
  out["rhs"] = rat_to_json(Rat(q.rhs()));
  return out;
}

namespace {

std::vector<IVec> parse_ivec_list(const Json& arr) {
  std::vector<IVec> out;
  for (const Json& row : arr) {
    QVec q;
    for (const Json& v : row) q.push_back(json_to_rat(v));
    out.push_back(primitive(integral_multiple(q)));
  }
  return out;
}

Json ivec_list_to_json(const std::vector<IVec>& vs) {
  Json arr = Json::array();
  for (const IVec& v : vs) {
    Json row = Json::array();
    for (const Int& x : v) row.push_back(int_str(x));
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

PolyCone parse_cone(const Json& j) {
  if (!j.contains("dim")) throw hy_error("cone file needs field dim");
  PolyCone c;
  c.dim = j.at("dim").get<int>();
  if (j.contains("rays")) c.rays = parse_ivec_list(j.at("rays"));
  if (j.contains("facets")) c.facets = parse_ivec_list(j.at("facets"));
  if (j.contains("equations")) c.equations = parse_ivec_list(j.at("equations"));
  if (!c.rays && !c.facets)
    throw hy_error("cone file needs rays or facets");
  return c;
}

Json cone_to_json(const PolyCone& c) {
  Json out;
  out["dim"] = c.dim;
  if (c.rays) out["rays"] = ivec_list_to_json(*c.rays);
  if (c.facets) out["facets"] = ivec_list_to_json(*c.facets);
  if (!c.equations.empty()) out["equations"] = ivec_list_to_json(c.equations);
  return out;
}

std::pair<int, std::vector<QVec>> parse_points(const Json& j) {
  if (!j.contains("dim") || !j.contains("points"))
    throw hy_error("points file needs fields dim, points");
  int dim = j.at("dim").get<int>();
  std::vector<QVec> pts;
  for (const Json& row : j.at("points")) {
    QVec p;
    for (const Json& v : row) p.push_back(json_to_rat(v));
    if (static_cast<int>(p.size()) != dim)
      throw hy_error("point length != dim");
    pts.push_back(std::move(p));
  }
  return {dim, pts};
}

Json polytope_to_json(const PolyTope& p) {
  Json out;
  out["dim"] = p.dim;
  out["ambient_dim"] = p.ambient_dim;
  Json vs = Json::array();
  for (const QVec& v : p.vertices) {
    Json row = Json::array();
    for (const Rat& x : v) row.push_back(rat_to_json(x));
    vs.push_back(std::move(row));
  }
  out["vertices"] = std::move(vs);
  out["facets"] = ivec_list_to_json(p.facets);
  if (!p.equations.empty()) out["equations"] = ivec_list_to_json(p.equations);
  return out;
}

Graph parse_graph(const Json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw hy_error("graph file needs fields n, edges");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const Json& e : j.at("edges")) {
    if (e.size() != 2) throw hy_error("edge needs two endpoints");
    edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  return Graph(n, std::move(edges));
}

Json graph_to_json(const Graph& g) {
  Json out;
  out["n"] = g.n;
  Json es = Json::array();
  for (auto [u, v] : g.edges) es.push_back(Json::array({u + 1, v + 1}));
  out["edges"] = std::move(es);
  return out;
}

PathSystem parse_paths(const Json& j) {
  if (!j.contains("terminals") || !j.contains("paths"))
    throw hy_error("path file needs fields terminals, paths");
  PathSystem sys;
  for (const Json& t : j.at("terminals")) sys.terminals.push_back(t.get<int>() - 1);
  for (auto it = j.at("paths").begin(); it != j.at("paths").end(); ++it) {
    const std::string& key = it.key();
    auto comma = key.find(',');
    if (comma == std::string::npos) throw hy_error("path key must be \"i,j\"");
    int i = std::stoi(key.substr(0, comma)) - 1;
    int k = std::stoi(key.substr(comma + 1)) - 1;
    if (i > k) std::swap(i, k);
    std::vector<int> p;
    for (const Json& v : it.value()) p.push_back(v.get<int>() - 1);
    sys.paths[{i, k}] = std::move(p);
  }
  return sys;
}

EdgeIneq parse_edge_ineq(const Json& j, const Graph& g) {
  EdgeIneq q;
  for (const Json& v : j.at("coeff")) q.coeff.push_back(json_to_rat(v));
  if (q.coeff.size() != g.edges.size())
    throw hy_error("edge inequality: coefficient count != edge count");
  q.rhs = json_to_rat(j.at("rhs"));
  if (j.contains("provenance")) q.provenance = j.at("provenance").get<std::string>();
  return q;
}

Json edge_ineq_to_json(const EdgeIneq& q, const Graph& g) {
  Json out = graph_to_json(g);
  Json cs = Json::array();
  for (const Rat& c : q.coeff) cs.push_back(rat_to_json(c));
  out["coeff"] = std::move(cs);
  out["rhs"] = rat_to_json(q.rhs);
  if (!q.provenance.empty()) out["provenance"] = q.provenance;
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hy_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw hy_error("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw hy_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace hycone
