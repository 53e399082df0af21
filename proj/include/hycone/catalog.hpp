#pragma once

#include <array>
#include <map>

#include "hycone/base.hpp"

namespace hycone {

// Published reference data for the n = 8 hypermetric catalog, transcribed
// once and checksummed. HYCONE_DATA overrides the embedded copy with TSV
// files produced by catalog_dump().

struct FacetOrbitRow {  // HYP_8 facet orbits (86 rows, 22 switching classes)
  int cls = 0, sub = 0;  // label F_{cls,sub}
  std::array<int, 8> b{};
  long long size56 = 0;  // orbit size / 56
  int cut_rank = 0;
  std::array<long long, 4> inc{};  // ([0,1], 2_21, 3_21, ER_7)
  bool simplicial = false;
  bool bold = false;  // first representative of its switching class
};

struct PolyFacetRow {  // HYPP_8 facet orbits (22 rows)
  int cls = 0;         // label F_cls
  std::array<int, 8> b{};
  long long size32 = 0;  // ARes orbit size / 32
  int classes = 0;       // Sym(8)-orbits composing the ARes orbit
  std::array<long long, 3> inc{};  // ([0,1], {2_21,3_21}, ER_7)
  bool simplicial = false;
};

struct VertexOrbitRow {  // HYPP_8 vertex orbits from 2_21 / 3_21 (24 rows)
  int idx = 0;
  long long stab = 0;
  long long size10752 = 0;  // orbit size / 10,752
  long long orbits_sym = 0;
  std::string merging;  // stored verbatim, unverified
  long long incidence = 0, adjacency = 0;
};

struct DelaunaySimplexRow {  // 7-dimensional Delaunay simplices (11 rows)
  int idx = 0;
  int vol = 0;
  long long aut = 0;
  long long facets = 0;  // of Bar_S, stored only
  int facet_orbits = 0;
};

struct CountsEntry {
  long long count = 0;
  long long orbits = 0;
};

struct RaySource {  // extreme-ray breakdown of HYP_8
  std::string name;
  long long orbits = 0;
  long long rays = 0;
};

struct Catalog {
  std::vector<FacetOrbitRow> hyp8_facets;
  std::vector<PolyFacetRow> hypp8_facets;
  std::vector<VertexOrbitRow> hypp8_vertices;
  std::array<std::array<long long, 7>, 6> hypp7_incidence{};  // V1..V6 x F1..F7
  std::vector<DelaunaySimplexRow> delaunay7;
  // counts[family][n-3], families: cut_e, cut_f, hyp_e, hyp_f, met_e, met_f,
  // hypp_v, hypp_f
  std::map<std::string, std::array<CountsEntry, 6>> counts;
  std::vector<RaySource> ray_sources;
  long long ray_total = 0, ray_orbit_total = 0;
  long long vertex_orbits_cut = 0, vertex_orbits_2321 = 0,
            vertex_orbits_er7 = 0, vertex_orbit_total = 0;
};

// Embedded data, or the HYCONE_DATA directory when that variable is set.
const Catalog& catalog();
const Catalog& embedded_catalog();

std::string catalog_dump(const Catalog& c);  // canonical TSV, also the
                                             // HYCONE_DATA interchange format
Catalog catalog_parse(const std::string& tsv);
uint64_t catalog_checksum(const Catalog& c);  // FNV-1a over the dump

struct CheckRow {
  std::string table, row, check, expected, computed;
  bool ok = false;
  bool info = false;  // reported, not counted as failure
};

struct Report {
  std::vector<CheckRow> rows;
  bool all_ok() const;
  std::string tsv() const;
  void add(const std::string& table, const std::string& row,
           const std::string& check, const std::string& expected,
           const std::string& computed, bool info = false);
};

Report verify_table1_small();
Report verify_table2();
Report verify_table4();
Report verify_totals();
// deep: additionally convert the n = 7 hypermetric inequality description to
// rays and check the facet-orbit gcd (long run).
Report verify_gcd(bool deep = false);
Report verify_all(bool deep = false);

}  // namespace hycone
