#include "hycone/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hycone/catalog.hpp"
#include "hycone/io.hpp"
#include "hycone/lattice.hpp"
#include "hycone/repartition.hpp"
#include "hycone/symmetry.hpp"

namespace hycone::cli {

namespace {

struct OutFile {
  std::ostream& resolve(const std::string& path, std::ostream& fallback) {
    if (path.empty()) return fallback;
    file.open(path);
    if (!file) throw hy_error("cannot write " + path);
    return file;
  }
  std::ofstream file;
};

int cmd_gen_ineq(const std::string& family, int n, int max_abs, bool per_class,
                 const std::string& out_path, std::ostream& stdout_) {
  OutFile of;
  std::ostream& out = of.resolve(out_path, stdout_);
  auto emit = [&](const BInequality& q) { out << bineq_to_json(q).dump() << "\n"; };
  if (family == "met") {
    for (const BInequality& q : met_family(n)) emit(q);
  } else if (family == "metp") {
    for (const BInequality& q : metp_family(n)) emit(q);
  } else {
    BTarget target = family == "hyp" ? BTarget::Cone : BTarget::Polytope;
    gen_b(n, max_abs, target, per_class, [&](const GenB& g) {
      Json j = bineq_to_json(g.ineq);
      j["trivial"] = g.trivial;
      if (g.gonal_k >= 0) j["gonal"] = 2 * g.gonal_k + 1;
      out << j.dump() << "\n";
    });
  }
  return 0;
}

int cmd_cuts(int n, bool polytope, const std::string& out_path,
             std::ostream& stdout_) {
  OutFile of;
  std::ostream& out = of.resolve(out_path, stdout_);
  for (const CutVec& c : cuts(n, polytope))
    out << distance_to_json(c.dist()).dump() << "\n";
  return 0;
}

int cmd_convert(const std::string& in, const std::string& to,
                const std::string& out_path, std::ostream& stdout_) {
  PolyCone cone = parse_cone(load_json_file(in));
  if (to == "rays" && !cone.facets) throw hy_error("input has no facets");
  if (to == "facets" && !cone.rays) throw hy_error("input has no rays");
  if (to == "rays") {
    cone.rays.reset();
    dd_convert(cone);
  } else {
    cone.facets.reset();
    dd_convert(cone);
  }
  OutFile of;
  of.resolve(out_path, stdout_) << cone_to_json(cone).dump(2) << "\n";
  return 0;
}

int cmd_hull(const std::string& in, const std::string& out_path,
             std::ostream& stdout_) {
  auto [dim, pts] = parse_points(load_json_file(in));
  (void)dim;
  PolyTope p = hull(pts);
  OutFile of;
  of.resolve(out_path, stdout_) << polytope_to_json(p).dump(2) << "\n";
  return 0;
}

int cmd_member(const std::string& family, const std::string& in, bool witness,
               std::ostream& out) {
  DistVec d = parse_distance(load_json_file(in));
  MembershipResult r = family == "hyp" ? member_hyp(d) : member_hypp(d);
  if (is_member(r)) {
    out << "Member\n";
    return 0;
  }
  const Violated& v = std::get<Violated>(r);
  out << "Violated\n";
  if (witness) {
    out << "witness_b:";
    for (int x : v.witness.b) out << " " << x;
    out << "\nrhs: " << v.witness.rhs()
        << "\nlhs: " << rat_str(eval_hyp(v.witness, d))
        << "\nviolation: " << rat_str(v.amount) << "\n";
  }
  return 1;
}

int cmd_max_scale(const std::string& in, std::ostream& out) {
  DistVec d = parse_distance(load_json_file(in));
  out << rat_str(max_scale(d)) << "\n";
  return 0;
}

int cmd_orbit(int n, const std::string& blist, bool with_switch, bool members,
              std::ostream& out) {
  BVec b;
  std::stringstream ss(blist);
  std::string tok;
  while (std::getline(ss, tok, ',')) b.push_back(std::stoi(tok));
  if (static_cast<int>(b.size()) != n) throw hy_error("--b length != n");
  BInequality q(b);
  Group g = with_switch ? Group::ARes : Group::Sym;
  BOrbitSummary orb = orbit_bineq(q, g, members);
  BVec canon = canonical_bineq(q, g);
  auto vec_str = [](const BVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  out << "representative\tsize\tstabilizer\tclass\n";
  out << vec_str(orb.canonical) << "\t" << orb.size << "\t"
      << orb.stabilizer_order << "\t" << vec_str(canon) << "\n";
  if (members)
    for (const BVec& m : orb.members) out << vec_str(m) << "\n";
  return 0;
}

int cmd_lift(const std::string& graph_path, const std::string& ineq_path,
             const std::string& paths_path, bool check, int jobs,
             const std::string& out_path, std::ostream& stdout_) {
  Graph g = parse_graph(load_json_file(graph_path));
  BInequality q = parse_bineq(load_json_file(ineq_path));
  PathSystem sys = parse_paths(load_json_file(paths_path));
  EdgeIneq lifted = lift_ineq(bineq_to_pair_ineq(q), g, sys);
  {
    std::string prov = "lift of b =";
    for (int x : q.b) prov += " " + std::to_string(x);
    lifted.provenance = prov;
  }
  OutFile of;
  of.resolve(out_path, stdout_) << edge_ineq_to_json(lifted, g).dump(2) << "\n";
  if (check) {
    ValidityReport rep = check_valid(lifted, g, jobs);
    stdout_ << (rep.valid ? "valid" : "invalid") << " max "
            << rat_str(rep.max_value) << " rhs " << rat_str(lifted.rhs) << "\n";
    return rep.valid ? 0 : 1;
  }
  return 0;
}

int cmd_repartition(const std::string& points_path, std::ostream& out) {
  auto [dim, qpts] = parse_points(load_json_file(points_path));
  (void)dim;
  std::vector<IVec> pts;
  for (const QVec& p : qpts) {
    IVec v(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
      if (rat_den(p[i]) != 1) throw hy_error("repartition points must be integral");
      v[i] = rat_num(p[i]);
    }
    pts.push_back(std::move(v));
  }
  RepartitionConfig cfg = make_config(pts);
  Json j;
  Json alpha = Json::array();
  for (const Int& a : cfg.alpha) alpha.push_back(int_str(a));
  j["alpha"] = std::move(alpha);
  Json sp = Json::array(), sm = Json::array();
  for (int i : cfg.s_plus) sp.push_back(i + 1);
  for (int i : cfg.s_minus) sm.push_back(i + 1);
  j["s_plus"] = std::move(sp);
  j["s_minus"] = std::move(sm);
  j["degenerate"] = cfg.degenerate;
  auto [tp, tm] = two_triangulations(cfg);
  auto tri_json = [](const Triangulation& t) {
    Json arr = Json::array();
    for (size_t k = 0; k < t.omitted.size(); ++k) {
      Json s;
      s["omit"] = t.omitted[k] + 1;
      s["volume"] = int_str(t.volumes[k]);
      arr.push_back(std::move(s));
    }
    return arr;
  };
  j["t_plus"] = tri_json(tp);
  j["t_minus"] = tri_json(tm);
  Int vp = 0, vm = 0;
  for (const Int& v : tp.volumes) vp += v;
  for (const Int& v : tm.volumes) vm += v;
  j["volume_balance"] = (vp == vm);
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& table, bool deep, std::ostream& out) {
  Report rep;
  if (table == "t1") rep = verify_table1_small();
  else if (table == "t2") rep = verify_table2();
  else if (table == "t4") rep = verify_table4();
  else if (table == "totals") rep = verify_totals();
  else if (table == "gcd") rep = verify_gcd(deep);
  else rep = verify_all(deep);
  out << rep.tsv();
  return rep.all_ok() ? 0 : 1;
}

int cmd_catalog_dump(const std::string& dir, std::ostream& out) {
  std::ofstream f(dir + "/catalog.tsv");
  if (!f) throw hy_error("cannot write " + dir + "/catalog.tsv");
  f << catalog_dump(catalog());
  out << "wrote " << dir << "/catalog.tsv\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact computations with hypermetric, cut and metric cones"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "parallel worker cap")->capture_default_str();

  std::string family, in_path, out_path, to, blist;
  std::string graph_path, ineq_path, paths_path, points_path, table, dump_dir;
  int n = 0, max_abs = 1;
  bool polytope = false, per_class = false, witness = false;
  bool with_switch = false, members = false, check = false, deep = false;

  auto* gen = app.add_subcommand("gen-ineq", "generate inequality families");
  gen->add_option("--family", family)->required()
      ->check(CLI::IsMember({"hyp", "hypp", "met", "metp"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--max-abs", max_abs);
  gen->add_flag("--per-class", per_class, "one representative per switching class");
  gen->add_option("--out", out_path);

  auto* cts = app.add_subcommand("cuts", "cut semimetrics modulo complement");
  cts->add_option("--n", n)->required();
  cts->add_flag("--polytope", polytope, "include the zero cut");
  cts->add_option("--out", out_path);

  auto* cnv = app.add_subcommand("convert", "facets <-> extreme rays");
  cnv->add_option("--in", in_path)->required();
  cnv->add_option("--to", to)->required()->check(CLI::IsMember({"rays", "facets"}));
  cnv->add_option("--out", out_path);

  auto* hl = app.add_subcommand("hull", "convex hull of points");
  hl->add_option("--in", in_path)->required();
  hl->add_option("--out", out_path);

  auto* mem = app.add_subcommand("member", "hypermetric membership test");
  mem->add_option("--family", family)->required()
      ->check(CLI::IsMember({"hyp", "hypp"}));
  mem->add_option("--in", in_path)->required();
  mem->add_flag("--witness", witness);

  auto* ms = app.add_subcommand("max-scale", "largest lambda with lambda*d in HYPP_n");
  ms->add_option("--in", in_path)->required();

  auto* orb = app.add_subcommand("orbit", "orbit of a b-inequality");
  orb->add_option("--n", n)->required();
  orb->add_option("--b", blist, "comma-separated coordinates")->required();
  orb->add_flag("--switch", with_switch, "extend the group by switchings");
  orb->add_flag("--members", members);

  auto* lf = app.add_subcommand("lift", "lift an inequality along a path system");
  lf->add_option("--graph", graph_path)->required();
  lf->add_option("--ineq", ineq_path)->required();
  lf->add_option("--paths", paths_path)->required();
  lf->add_flag("--check", check, "brute-force validity over the graph cuts");
  lf->add_option("--out", out_path);

  auto* rp = app.add_subcommand("repartition", "affine relation and the two triangulations");
  rp->add_option("--points", points_path)->required();

  auto* vf = app.add_subcommand("verify", "check the computed world against the catalog");
  vf->add_option("--table", table)->required()
      ->check(CLI::IsMember({"t1", "t2", "t4", "totals", "gcd", "all"}));
  vf->add_flag("--deep", deep, "include the long n = 7 conversion");

  auto* cd = app.add_subcommand("catalog", "catalog utilities");
  cd->add_option("--dump", dump_dir, "write catalog.tsv into a directory")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen_ineq(family, n, max_abs, per_class, out_path, out);
    if (cts->parsed()) return cmd_cuts(n, polytope, out_path, out);
    if (cnv->parsed()) return cmd_convert(in_path, to, out_path, out);
    if (hl->parsed()) return cmd_hull(in_path, out_path, out);
    if (mem->parsed()) return cmd_member(family, in_path, witness, out);
    if (ms->parsed()) return cmd_max_scale(in_path, out);
    if (orb->parsed()) return cmd_orbit(n, blist, with_switch, members, out);
    if (lf->parsed()) return cmd_lift(graph_path, ineq_path, paths_path, check, jobs, out_path, out);
    if (rp->parsed()) return cmd_repartition(points_path, out);
    if (vf->parsed()) return cmd_verify(table, deep, out);
    if (cd->parsed()) return cmd_catalog_dump(dump_dir, out);
  } catch (const hy_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hycone::cli
