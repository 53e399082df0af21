#include "hycone/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hycone/hypfamilies.hpp"
#include "hycone/polyhedra.hpp"
#include "hycone/symmetry.hpp"

namespace hycone {

namespace {

// Transcribed reference data; this literal is also the canonical dump, so
// the checksum test pins the transcription.
const char* kEmbedded = R"(# hycone catalog
[hyp8_facets]
1	1	0	0	0	0	0	-1	1	1	3	27	95	329734	737128	17725428	0	1
2	1	0	0	0	-1	-1	1	1	1	10	27	79	93978	176058	3780630	0	1
3	1	0	0	-1	-1	-1	1	1	2	30	27	59	10460	13052	209644	0	1
3	2	0	0	-1	1	1	1	1	-2	15	27	59	10460	13052	209644	0	0
4	1	0	-1	-1	-1	1	1	1	1	5	27	69	36816	60480	1207584	0	1
5	1	0	-1	-1	-1	-1	1	1	3	15	27	41	400	240	620	0	1
5	2	0	-1	1	1	1	1	1	-3	6	27	41	400	240	620	0	0
6	1	0	-1	-1	1	1	1	-2	2	60	27	51	3567	3288	46176	0	1
6	2	0	-1	-1	-1	-1	1	2	2	15	27	51	3650	4680	64400	0	0
6	3	0	1	1	1	1	1	-2	-2	3	27	51	3650	4680	64400	0	0
7	1	0	-1	-1	-1	1	-2	2	3	120	26	39	311	220	1479	0	1
7	2	0	-1	-1	1	1	2	2	-3	90	26	39	325	172	1461	0	0
7	3	0	-1	1	1	1	-2	-2	3	60	26	39	325	172	1461	0	0
7	4	0	1	1	1	1	-2	2	-3	30	26	39	311	220	1479	0	0
8	1	-1	-1	-1	-1	1	1	1	2	5	27	55	6840	8526	141642	0	1
8	2	-1	-1	1	1	1	1	1	-2	3	27	55	6840	8526	141642	0	0
9	1	-1	-1	-1	-1	-1	1	1	4	3	27	27	0	0	0	1	1
9	2	-1	1	1	1	1	1	1	-4	1	27	27	0	0	0	1	0
10	1	-1	-1	-1	1	1	1	-2	3	20	27	41	645	282	3021	0	1
10	2	-1	-1	1	1	1	1	2	-3	15	27	41	645	282	3021	0	0
10	3	-1	-1	-1	-1	-1	1	2	3	6	27	41	495	828	5094	0	0
10	4	1	1	1	1	1	1	-2	-3	1	27	41	495	828	5094	0	0
11	1	-1	-1	-1	1	1	-2	2	2	30	27	45	1464	1390	18310	0	1
11	2	-1	1	1	1	1	-2	-2	2	15	27	45	1464	1390	18310	0	0
11	3	-1	-1	-1	-1	-1	2	2	2	1	27	45	2070	1458	34956	0	0
12	1	-1	-1	1	1	-2	-2	2	3	90	27	37	293	166	1638	0	1
12	2	-1	1	1	1	-2	2	2	-3	60	27	37	293	166	1638	0	0
12	3	-1	-1	-1	1	2	2	2	-3	20	27	37	306	279	2616	0	0
12	4	-1	-1	-1	-1	-2	2	2	3	15	27	37	300	285	2500	0	0
12	5	1	1	1	1	-2	-2	-2	3	5	27	37	306	279	2616	0	0
13	1	-1	-1	-1	-1	1	-2	2	4	30	26	31	35	31	31	0	1
13	2	-1	-1	1	1	1	-2	-2	4	30	26	31	45	3	24	0	0
13	3	-1	-1	1	1	1	2	2	-4	30	26	31	45	3	24	0	0
13	4	1	1	1	1	1	-2	2	-4	6	26	31	35	31	31	0	0
14	1	-1	-1	-1	1	1	2	-3	3	60	26	35	142	46	268	0	1
14	2	-1	1	1	1	1	-2	-3	3	30	26	35	142	46	268	0	0
14	3	-1	-1	-1	-1	1	-2	3	3	15	26	35	110	142	404	0	0
14	4	1	1	1	1	1	2	-3	-3	3	26	35	110	142	404	0	0
15	1	-1	-1	-1	-1	1	-3	3	4	30	26	26	0	0	1	1	1
15	2	-1	-1	-1	1	1	3	3	-4	30	26	26	0	0	1	1	0
15	3	-1	1	1	1	1	-3	-3	4	15	26	26	0	0	1	1	0
15	4	1	1	1	1	1	-3	3	-4	6	26	26	0	0	1	1	0
16	1	-1	-1	1	-2	2	2	-3	3	180	26	32	63	36	177	0	1
16	2	1	1	1	-2	-2	2	-3	3	60	26	32	63	36	177	0	0
16	3	-1	1	1	2	2	2	-3	-3	30	26	32	82	38	272	0	0
16	4	-1	1	1	-2	-2	-2	3	3	30	26	32	82	38	272	0	0
16	5	-1	-1	-1	-2	-2	2	3	3	30	26	32	94	26	266	0	0
17	1	-1	-1	1	1	-2	2	-3	4	180	25	30	41	6	51	0	1
17	2	-1	1	1	1	-2	2	3	-4	120	25	30	41	6	51	0	0
17	3	-1	-1	-1	1	2	2	3	-4	60	25	30	40	22	74	0	0
17	4	-1	-1	-1	1	-2	-2	3	4	60	25	30	30	32	74	0	0
17	5	1	1	1	1	-2	-2	-3	4	15	25	30	40	22	74	0	0
17	6	1	1	1	1	2	2	-3	-4	15	25	30	30	32	74	0	0
17	7	-1	-1	-1	-1	2	2	-3	4	15	25	30	40	22	72	0	0
18	1	-1	-1	1	-2	2	3	3	-4	180	25	27	13	9	20	0	1
18	2	-1	1	1	2	2	-3	3	-4	180	25	27	15	3	15	0	0
18	3	-1	1	1	-2	-2	-3	3	4	180	25	27	15	3	15	0	0
18	4	-1	-1	-1	-2	2	-3	3	4	120	25	27	13	9	18	0	0
18	5	-1	-1	1	2	2	-3	-3	4	90	25	27	21	1	22	0	0
18	6	1	1	1	-2	2	-3	-3	4	60	25	27	13	9	20	0	0
18	7	1	1	1	-2	-2	3	3	-4	30	25	27	21	1	22	0	0
19	1	-1	-1	-1	1	-2	-2	2	5	60	24	24	2	1	0	1	1
19	2	-1	-1	1	1	2	2	2	-5	30	24	24	3	0	0	1	0
19	3	-1	1	1	1	-2	-2	-2	5	20	24	24	3	0	0	1	0
19	4	1	1	1	1	-2	2	2	-5	15	24	24	2	1	0	1	0
20	1	-1	-1	-1	1	-2	-3	3	5	120	24	24	1	1	1	1	1
20	2	-1	-1	1	1	2	-3	-3	5	90	24	24	2	0	1	1	0
20	3	-1	-1	-1	1	2	3	3	-5	60	24	24	2	0	1	1	0
20	4	-1	1	1	1	-2	3	3	-5	60	24	24	2	0	1	1	0
20	5	1	1	1	1	2	-3	3	-5	30	24	24	1	1	1	1	0
20	6	1	1	1	1	-2	-3	-3	5	15	24	24	2	0	1	1	0
21	1	-1	1	-2	2	2	-3	-3	5	180	23	23	2	1	1	1	1
21	2	-1	-1	-2	-2	2	-3	3	5	180	23	23	3	0	1	1	0
21	3	-1	1	2	2	2	-3	3	-5	120	23	23	2	1	1	1	0
21	4	1	1	-2	-2	2	3	3	-5	90	23	23	2	1	1	1	0
21	5	-1	-1	-2	2	2	3	3	-5	90	23	23	3	0	1	1	0
21	6	1	1	-2	-2	-2	-3	3	5	60	23	23	2	1	1	1	0
22	1	-1	-1	1	-2	2	3	4	-5	360	23	23	2	1	1	1	1
22	2	-1	-1	1	-2	-2	-3	4	5	180	23	23	2	1	1	1	0
22	3	-1	1	1	-2	-2	3	-4	5	180	23	23	3	0	1	1	0
22	4	-1	1	1	2	2	-3	4	-5	180	23	23	3	0	1	1	0
22	5	-1	-1	1	2	2	-3	-4	5	180	23	23	3	0	1	1	0
22	6	1	1	1	-2	2	-3	-4	5	120	23	23	2	1	1	1	0
22	7	-1	-1	-1	-2	2	3	-4	5	120	23	23	2	1	1	1	0
22	8	1	1	1	2	2	3	-4	-5	60	23	23	2	1	1	1	0
22	9	1	1	1	-2	-2	3	4	-5	60	23	23	3	0	1	1	0
[hypp8_facets]
1	0	0	0	0	0	1	1	1	7	2	96	1598784	80836608	0
2	0	0	0	1	1	1	1	1	28	3	80	383040	14300640	0
3	0	1	1	1	1	1	1	1	16	4	70	131712	3975552	0
4	0	0	1	1	1	1	1	2	168	6	60	32160	590960	0
5	0	1	1	1	1	1	2	2	336	9	52	9600	122160	0
6	1	1	1	1	1	1	1	2	32	8	56	19656	370272	0
7	0	1	1	1	1	1	1	3	112	7	42	840	1120	0
8	1	1	1	1	1	2	2	2	224	12	46	3528	39906	0
9	0	1	1	1	1	2	2	3	1680	15	40	656	2686	0
10	1	1	1	1	1	1	2	3	224	14	42	1323	6489	0
11	1	1	1	1	1	1	1	4	32	8	28	0	0	1
12	1	1	1	1	1	2	3	3	672	18	36	252	464	0
13	1	1	1	1	2	2	2	3	1120	20	38	585	3210	0
14	1	1	1	1	1	2	2	4	672	18	32	66	36	0
15	1	1	1	2	2	2	3	3	2240	24	33	120	302	0
16	1	1	1	1	2	2	3	4	3360	30	31	62	82	0
17	1	1	1	1	2	2	2	5	1120	20	25	3	0	1
18	1	1	1	1	1	3	3	4	672	18	27	0	1	1
19	1	1	1	2	2	3	3	4	6720	36	28	22	22	0
20	1	1	1	1	2	3	3	5	3360	30	25	2	1	1
21	1	1	2	2	2	3	3	5	6720	36	24	3	1	1
22	1	1	1	2	2	3	4	5	13440	48	24	3	1	1
[hypp8_vertices]
1	24	20	36	2_21(8), 3_21(12)	112	848
2	48	10	30	2_21(7), 3_21(10)	104	799
3	96	5	23	2_21(5), 3_21(8)	94	701
4	12	40	48	2_21(11), 3_21(16)	94	758
5	8	60	46	2_21(10), 3_21(16)	94	804
6	12	40	40	2_21(8), 3_21(16)	92	979
7	240	2	18	2_21(2), 3_21(5)	86	926
8	12	40	48	2_21(11), 3_21(16)	86	709
9	8	60	54	2_21(12), 3_21(18)	86	728
10	4	120	72	2_21(16), 3_21(24)	86	774
11	16	30	33	2_21(6), 3_21(13)	84	1070
12	4	120	60	2_21(12), 3_21(24)	84	963
13	48	10	26	2_21(4), 3_21(8)	82	1023
14	12	40	48	2_21(7), 3_21(18)	81	1080
15	4	120	60	2_21(9), 3_21(30)	79	935
16	20	24	24	2_21(5), 3_21(8)	78	734
17	16	30	33	2_21(7), 3_21(12)	78	679
18	8	60	46	2_21(10), 3_21(16)	78	690
19	4	120	56	2_21(12), 3_21(20)	78	716
20	4	120	56	2_21(9), 3_21(25)	78	1050
21	60	8	16	2_21(2), 3_21(6)	76	1070
22	4	120	48	2_21(9), 3_21(20)	76	941
23	16	30	29	2_21(5), 3_21(11)	74	1032
24	4	120	48	2_21(8), 3_21(22)	74	920
[hypp7_incidence]
105	210	35	630	546	147	2100
8	6	0	4	2	0	1
11	6	1	2	1	0	0
12	7	0	2	0	0	0
15	5	1	0	0	0	0
14	7	0	0	0	0	0
[delaunay7]
1	1	40320	298592	86
2	2	40320	5768	9
3	2	1440	6590	62
4	3	540	966	9
5	3	1152	728	9
6	3	240	640	39
7	4	1440	28	3
8	4	240	153	11
9	4	144	131	10
10	5	72	28	6
11	5	48	28	8
[counts]
cut_e	3	1	7	2	15	2	31	3	63	3	127	4
cut_f	3	1	12	1	40	2	210	4	38780	36	49604520	2169
hyp_e	3	1	7	2	15	2	31	3	37170	29	242695427	9003
hyp_f	3	1	12	1	40	2	210	4	3773	14	298592	86
met_e	3	1	7	2	25	3	296	7	55226	46	119269588	3918
met_f	3	1	12	1	30	1	60	1	105	1	168	1
hypp_v	4	1	8	1	16	1	32	1	113152	6	1388383872	581
hypp_f	4	1	16	1	56	2	68	3	10396	7	1374560	22
[ray_sources]
interval	4	127
2_21	195	231596
3_21	374	7126560
ER_7	8430	235337144
[ray_totals]
242695427	9003
[vertex_orbits]
1	24	556	581
)";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long long to_ll(const std::string& s) { return std::stoll(s); }

}  // namespace

Catalog catalog_parse(const std::string& tsv) {
  Catalog c;
  std::istringstream in(tsv);
  std::string line, section;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == '[') {
      section = line;
      continue;
    }
    auto f = split_tabs(line);
    if (section == "[hyp8_facets]") {
      FacetOrbitRow r;
      r.cls = static_cast<int>(to_ll(f[0]));
      r.sub = static_cast<int>(to_ll(f[1]));
      for (int i = 0; i < 8; ++i) r.b[i] = static_cast<int>(to_ll(f[2 + i]));
      r.size56 = to_ll(f[10]);
      r.cut_rank = static_cast<int>(to_ll(f[11]));
      for (int i = 0; i < 4; ++i) r.inc[i] = to_ll(f[12 + i]);
      r.simplicial = f[16] == "1";
      r.bold = f[17] == "1";
      c.hyp8_facets.push_back(r);
    } else if (section == "[hypp8_facets]") {
      PolyFacetRow r;
      r.cls = static_cast<int>(to_ll(f[0]));
      for (int i = 0; i < 8; ++i) r.b[i] = static_cast<int>(to_ll(f[1 + i]));
      r.size32 = to_ll(f[9]);
      r.classes = static_cast<int>(to_ll(f[10]));
      for (int i = 0; i < 3; ++i) r.inc[i] = to_ll(f[11 + i]);
      r.simplicial = f[14] == "1";
      c.hypp8_facets.push_back(r);
    } else if (section == "[hypp8_vertices]") {
      VertexOrbitRow r;
      r.idx = static_cast<int>(to_ll(f[0]));
      r.stab = to_ll(f[1]);
      r.size10752 = to_ll(f[2]);
      r.orbits_sym = to_ll(f[3]);
      r.merging = f[4];
      r.incidence = to_ll(f[5]);
      r.adjacency = to_ll(f[6]);
      c.hypp8_vertices.push_back(r);
    } else if (section == "[hypp7_incidence]") {
      // rows arrive in order V1..V6; fill the first unused slot
      int target = 0;
      while (target < 6) {
        bool used = false;
        for (long long x : c.hypp7_incidence[target])
          if (x != 0) used = true;
        if (!used) break;
        ++target;
      }
      if (target == 6) throw hy_error("catalog: too many incidence rows");
      for (int i = 0; i < 7; ++i) c.hypp7_incidence[target][i] = to_ll(f[i]);
    } else if (section == "[delaunay7]") {
      DelaunaySimplexRow r;
      r.idx = static_cast<int>(to_ll(f[0]));
      r.vol = static_cast<int>(to_ll(f[1]));
      r.aut = to_ll(f[2]);
      r.facets = to_ll(f[3]);
      r.facet_orbits = static_cast<int>(to_ll(f[4]));
      c.delaunay7.push_back(r);
    } else if (section == "[counts]") {
      std::array<CountsEntry, 6> row;
      for (int i = 0; i < 6; ++i)
        row[i] = CountsEntry{to_ll(f[1 + 2 * i]), to_ll(f[2 + 2 * i])};
      c.counts[f[0]] = row;
    } else if (section == "[ray_sources]") {
      c.ray_sources.push_back(RaySource{f[0], to_ll(f[1]), to_ll(f[2])});
    } else if (section == "[ray_totals]") {
      c.ray_total = to_ll(f[0]);
      c.ray_orbit_total = to_ll(f[1]);
    } else if (section == "[vertex_orbits]") {
      c.vertex_orbits_cut = to_ll(f[0]);
      c.vertex_orbits_2321 = to_ll(f[1]);
      c.vertex_orbits_er7 = to_ll(f[2]);
      c.vertex_orbit_total = to_ll(f[3]);
    }
  }
  return c;
}

std::string catalog_dump(const Catalog& c) {
  std::ostringstream o;
  o << "# hycone catalog\n";
  o << "[hyp8_facets]\n";
  for (const auto& r : c.hyp8_facets) {
    o << r.cls << '\t' << r.sub;
    for (int x : r.b) o << '\t' << x;
    o << '\t' << r.size56 << '\t' << r.cut_rank;
    for (long long x : r.inc) o << '\t' << x;
    o << '\t' << (r.simplicial ? 1 : 0) << '\t' << (r.bold ? 1 : 0) << '\n';
  }
  o << "[hypp8_facets]\n";
  for (const auto& r : c.hypp8_facets) {
    o << r.cls;
    for (int x : r.b) o << '\t' << x;
    o << '\t' << r.size32 << '\t' << r.classes;
    for (long long x : r.inc) o << '\t' << x;
    o << '\t' << (r.simplicial ? 1 : 0) << '\n';
  }
  o << "[hypp8_vertices]\n";
  for (const auto& r : c.hypp8_vertices)
    o << r.idx << '\t' << r.stab << '\t' << r.size10752 << '\t' << r.orbits_sym
      << '\t' << r.merging << '\t' << r.incidence << '\t' << r.adjacency << '\n';
  o << "[hypp7_incidence]\n";
  for (const auto& row : c.hypp7_incidence) {
    for (int i = 0; i < 7; ++i) o << (i ? "\t" : "") << row[i];
    o << '\n';
  }
  o << "[delaunay7]\n";
  for (const auto& r : c.delaunay7)
    o << r.idx << '\t' << r.vol << '\t' << r.aut << '\t' << r.facets << '\t'
      << r.facet_orbits << '\n';
  o << "[counts]\n";
  for (const auto& [name, row] : c.counts) {
    o << name;
    for (const auto& e : row) o << '\t' << e.count << '\t' << e.orbits;
    o << '\n';
  }
  o << "[ray_sources]\n";
  for (const auto& s : c.ray_sources)
    o << s.name << '\t' << s.orbits << '\t' << s.rays << '\n';
  o << "[ray_totals]\n" << c.ray_total << '\t' << c.ray_orbit_total << '\n';
  o << "[vertex_orbits]\n"
    << c.vertex_orbits_cut << '\t' << c.vertex_orbits_2321 << '\t'
    << c.vertex_orbits_er7 << '\t' << c.vertex_orbit_total << '\n';
  return o.str();
}

uint64_t catalog_checksum(const Catalog& c) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : catalog_dump(c)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

const Catalog& embedded_catalog() {
  static const Catalog c = catalog_parse(kEmbedded);
  return c;
}

const Catalog& catalog() {
  static const Catalog c = [] {
    if (const char* dir = std::getenv("HYCONE_DATA")) {
      std::ifstream in(std::string(dir) + "/catalog.tsv");
      if (!in) throw hy_error("HYCONE_DATA set but catalog.tsv not readable");
      std::ostringstream buf;
      buf << in.rdbuf();
      return catalog_parse(buf.str());
    }
    return embedded_catalog();
  }();
  return c;
}

bool Report::all_ok() const {
  for (const auto& r : rows)
    if (!r.ok && !r.info) return false;
  return true;
}

void Report::add(const std::string& table, const std::string& row,
                 const std::string& check, const std::string& expected,
                 const std::string& computed, bool info) {
  rows.push_back(CheckRow{table, row, check, expected, computed,
                          expected == computed, info});
}

std::string Report::tsv() const {
  std::ostringstream o;
  o << "table\trow\tcheck\texpected\tcomputed\tstatus\n";
  for (const auto& r : rows)
    o << r.table << '\t' << r.row << '\t' << r.check << '\t' << r.expected
      << '\t' << r.computed << '\t'
      << (r.ok ? "ok" : (r.info ? "info" : "MISMATCH")) << '\n';
  return o.str();
}

namespace {

std::string ll(long long v) { return std::to_string(v); }

std::string counts_str(long long count, long long orbits) {
  return ll(count) + "(" + ll(orbits) + ")";
}

std::vector<IVec> cut_ray_vectors(int n) {
  std::vector<IVec> out;
  for (const CutVec& c : cuts(n, false)) out.push_back(to_ivec(c.delta()));
  return out;
}

IVec bineq_cone_facet(const BInequality& q) {
  IVec a(pair_count(q.n()));
  int k = 0;
  for (int i = 0; i < q.n(); ++i)
    for (int j = i + 1; j < q.n(); ++j, ++k) a[k] = -q.b[i] * q.b[j];
  return primitive(a);
}

}  // namespace

Report verify_table1_small() {
  Report rep;
  const Catalog& cat = catalog();
  for (int n = 3; n <= 6; ++n) {
    PolyCone cone = cone_from_rays(static_cast<int>(pair_count(n)),
                                   cut_ray_vectors(n));
    dd_convert(cone);
    auto ray_orbits = orbit_partition_pairs_sym(*cone.rays, n);
    auto facet_orbits = orbit_partition_pairs_sym(*cone.facets, n);
    const auto& ce = cat.counts.at("cut_e")[n - 3];
    const auto& cf = cat.counts.at("cut_f")[n - 3];
    rep.add("t1", "CUT_" + ll(n), "extreme rays", counts_str(ce.count, ce.orbits),
            counts_str(cone.rays->size(), ray_orbits.size()));
    rep.add("t1", "CUT_" + ll(n), "facets", counts_str(cf.count, cf.orbits),
            counts_str(cone.facets->size(), facet_orbits.size()));
    // HYP_n = CUT_n in this range: same computed numbers
    const auto& he = cat.counts.at("hyp_e")[n - 3];
    const auto& hf = cat.counts.at("hyp_f")[n - 3];
    rep.add("t1", "HYP_" + ll(n), "extreme rays", counts_str(he.count, he.orbits),
            counts_str(cone.rays->size(), ray_orbits.size()));
    rep.add("t1", "HYP_" + ll(n), "facets", counts_str(hf.count, hf.orbits),
            counts_str(cone.facets->size(), facet_orbits.size()));
  }
  for (int n = 3; n <= 8; ++n) {
    auto fam = met_family(n);
    const auto& mf = cat.counts.at("met_f")[n - 3];
    rep.add("t1", "MET_" + ll(n), "facet family size",
            ll(mf.count), ll(static_cast<long long>(fam.size())));
    if (n > 6) continue;
    std::vector<IVec> normals;
    for (const auto& q : fam) normals.push_back(bineq_cone_facet(q));
    PolyCone cone = cone_from_facets(static_cast<int>(pair_count(n)), normals);
    dd_convert(cone);
    auto ray_orbits = orbit_partition_pairs_sym(*cone.rays, n);
    const auto& me = cat.counts.at("met_e")[n - 3];
    rep.add("t1", "MET_" + ll(n), "extreme rays", counts_str(me.count, me.orbits),
            counts_str(cone.rays->size(), ray_orbits.size()));
    // irredundancy: converting the rays back returns exactly the triangles
    PolyCone back = cone_from_rays(cone.dim, *cone.rays);
    dd_convert(back);
    rep.add("t1", "MET_" + ll(n), "facet irredundancy",
            ll(static_cast<long long>(cone.facets->size())),
            ll(static_cast<long long>(back.facets->size())));
    rep.add("t1", "MET_" + ll(n), "facet round trip", "equal",
            *back.facets == *cone.facets ? "equal" : "different");
  }
  for (int n = 3; n <= 6; ++n) {
    std::vector<QVec> pts;
    for (const CutVec& c : cuts(n, true)) pts.push_back(to_qvec(to_ivec(c.delta())));
    PolyTope p = hull(pts);
    auto vert_orbits = orbit_partition_points_ares(p.vertices, n);
    const auto& hv = cat.counts.at("hypp_v")[n - 3];
    rep.add("t1", "HYPP_" + ll(n), "vertices", counts_str(hv.count, hv.orbits),
            counts_str(p.vertices.size(), vert_orbits.size()));
    auto facet_orbits = orbit_partition_homog_ares(p.facets, n);
    const auto& hf = cat.counts.at("hypp_f")[n - 3];
    // The table's n = 6 facet entry disagrees with the hull of the 32 cuts;
    // report the comparison without enforcing it.
    rep.add("t1", "HYPP_" + ll(n), "facets", counts_str(hf.count, hf.orbits),
            counts_str(p.facets.size(), facet_orbits.size()),
            /*info=*/n == 6);
  }
  return rep;
}

Report verify_table2() {
  Report rep;
  const Catalog& cat = catalog();
  long long total56 = 0;
  std::vector<BInequality> reps;
  for (const auto& r : cat.hyp8_facets) {
    std::string row = "F_{" + ll(r.cls) + "," + ll(r.sub) + "}";
    BVec b(r.b.begin(), r.b.end());
    long long sum = 0;
    for (int x : b) sum += x;
    rep.add("t2", row, "sum(b)", "1", ll(sum));
    BInequality q(b);
    reps.push_back(q);
    long long orbit = orbit_size_sym(b, 8);
    rep.add("t2", row, "orbit size / 56", ll(r.size56),
            orbit % 56 == 0 ? ll(orbit / 56) : "non-multiple(" + ll(orbit) + ")");
    rep.add("t2", row, "cut incidence", ll(r.inc[0]),
            ll(cut_incidence_count(q, false)));
    rep.add("t2", row, "cut rank", ll(r.cut_rank), ll(cut_rank(q, 8)));
    // the * marker is equivalent to a full incidence of exactly 27
    long long inc_total = r.inc[0] + r.inc[1] + r.inc[2] + r.inc[3];
    rep.add("t2", row, "simplicial marker", r.simplicial ? "27" : ">27",
            inc_total == 27 ? "27" : ">27");
    if (r.inc == std::array<long long, 4>{27, 0, 0, 0}) {
      rep.add("t2", row, "simplicial on cuts", "27=27",
              ll(cut_incidence_count(q, false)) + "=" + ll(cut_rank(q, 8)));
    }
    total56 += r.size56;
  }
  rep.add("t2", "total", "sum of orbit sizes", "298592", ll(56 * total56));

  auto classes = merge_classes(reps);
  rep.add("t2", "classes", "switching classes", "22",
          ll(static_cast<long long>(classes.size())));
  // rows of one table class agree with the computed class partition, and the
  // bold rows are exactly the first members
  std::map<int, std::vector<int>> by_cls;
  for (size_t i = 0; i < cat.hyp8_facets.size(); ++i)
    by_cls[cat.hyp8_facets[i].cls].push_back(static_cast<int>(i));
  bool partition_ok = classes.size() == by_cls.size();
  for (const auto& c : classes) {
    if (c.input_indices.empty()) { partition_ok = false; continue; }
    int cls = cat.hyp8_facets[c.input_indices.front()].cls;
    if (c.input_indices != by_cls[cls]) partition_ok = false;
  }
  rep.add("t2", "classes", "class partition matches labels", "yes",
          partition_ok ? "yes" : "no");
  bool bold_ok = true;
  for (const auto& r : cat.hyp8_facets)
    if (r.bold != (r.sub == 1)) bold_ok = false;
  rep.add("t2", "classes", "bold rows are first members", "yes",
          bold_ok ? "yes" : "no");
  return rep;
}

Report verify_table4() {
  Report rep;
  const Catalog& cat = catalog();
  long long total32 = 0;
  // Table 2 homogeneous representatives per class, ascending-sorted
  std::map<int, std::set<BVec>> t2_by_cls;
  for (const auto& r : cat.hyp8_facets) {
    BVec b(r.b.begin(), r.b.end());
    std::sort(b.begin(), b.end());
    t2_by_cls[r.cls].insert(b);
  }
  for (const auto& r : cat.hypp8_facets) {
    std::string row = "F_" + ll(r.cls);
    BVec b(r.b.begin(), r.b.end());
    BInequality q(b);
    auto classes = merge_classes({q});
    const AresClass& cls = classes.front();
    rep.add("t4", row, "orbit size / 32", ll(r.size32),
            cls.total_size % 32 == 0 ? ll(cls.total_size / 32)
                                     : "non-multiple(" + ll(cls.total_size) + ")");
    rep.add("t4", row, "#classes", ll(r.classes),
            ll(static_cast<long long>(cls.sym_orbits.size())));
    rep.add("t4", row, "cut incidence (with zero cut)", ll(r.inc[0]),
            ll(cut_incidence_count(q, true)));
    // homogeneous members = switching class of the corresponding cone rows
    std::set<BVec> homog;
    for (int idx : cls.homogeneous) {
      BVec h = cls.sym_orbits[idx].rep.b;
      homog.insert(h);
    }
    bool bij = homog == t2_by_cls[r.cls];
    rep.add("t4", row, "homogeneous members = cone class", "yes",
            bij ? "yes" : "no");
    total32 += r.size32;
  }
  rep.add("t4", "total", "sum of orbit sizes", "1374560", ll(32 * total32));
  rep.add("t4", "total", "rows", "22",
          ll(static_cast<long long>(cat.hypp8_facets.size())));
  return rep;
}

Report verify_totals() {
  Report rep;
  const Catalog& cat = catalog();
  long long rays = 0, orbits = 0;
  for (const auto& s : cat.ray_sources) {
    rays += s.rays;
    orbits += s.orbits;
  }
  rep.add("totals", "HYP_8 rays", "breakdown sum", ll(cat.ray_total), ll(rays));
  rep.add("totals", "HYP_8 rays", "table 1 value",
          ll(cat.counts.at("hyp_e")[5].count), ll(rays));
  rep.add("totals", "HYP_8 ray orbits", "breakdown sum",
          ll(cat.ray_orbit_total), ll(orbits));
  rep.add("totals", "HYP_8 ray orbits", "table 1 value",
          ll(cat.counts.at("hyp_e")[5].orbits), ll(orbits));
  rep.add("totals", "HYPP_8 vertex orbits", "1+24+556",
          ll(cat.vertex_orbit_total),
          ll(cat.vertex_orbits_cut + cat.vertex_orbits_2321 +
             cat.vertex_orbits_er7));
  rep.add("totals", "HYPP_8 vertex orbits", "table 1 value",
          ll(cat.counts.at("hypp_v")[5].orbits), ll(cat.vertex_orbit_total));
  long long group = 5160960;  // 2^7 * 8!
  for (const auto& v : cat.hypp8_vertices)
    rep.add("totals", "V_" + ll(v.idx), "|stab| * |orbit|", ll(group),
            ll(v.stab * 10752 * v.size10752));
  long long v1 = 0;
  for (long long x : cat.hypp7_incidence[0]) v1 += x;
  rep.add("totals", "HYPP_7 V_1", "incidence row sum",
          ll(cat.counts.at("hyp_f")[4].count), ll(v1));
  rep.add("totals", "HYPP_7 V_1", "F_1 entry = 3*C(7,3)", "105",
          ll(cat.hypp7_incidence[0][0]));
  return rep;
}

Report verify_gcd(bool deep) {
  Report rep;
  const Catalog& cat = catalog();
  const long long expected[4] = {3, 12, 10, 30};
  for (int n = 3; n <= 6; ++n) {
    PolyCone cone = cone_from_rays(static_cast<int>(pair_count(n)),
                                   cut_ray_vectors(n));
    dd_convert(cone);
    auto orbits = orbit_partition_pairs_sym(*cone.facets, n);
    long long g = 0;
    for (const auto& o : orbits) g = std::gcd(g, static_cast<long long>(o.size()));
    rep.add("gcd", "HYP_" + ll(n), "facet orbit gcd", ll(expected[n - 3]), ll(g));
  }
  {
    long long g = 0;
    for (const auto& r : cat.hyp8_facets) g = std::gcd(g, 56 * r.size56);
    rep.add("gcd", "HYP_8", "catalog orbit gcd", "56", ll(g));
  }
  if (deep) {
    // Long run: rays of HYP_7 from the |b_i| <= 3 inequality description,
    // then the facet-defining subset and its orbit gcd.
    std::vector<IVec> normals;
    for (const GenB& g : gen_b_list(7, 3, BTarget::Cone))
      if (!g.trivial) normals.push_back(bineq_cone_facet(g.ineq));
    PolyCone cone = cone_from_facets(static_cast<int>(pair_count(7)), normals);
    dd_convert(cone);
    rep.add("gcd", "HYP_7", "extreme rays",
            ll(cat.counts.at("hyp_e")[4].count),
            ll(static_cast<long long>(cone.rays->size())));
    PolyCone back = cone_from_rays(cone.dim, *cone.rays);
    dd_convert(back);
    rep.add("gcd", "HYP_7", "facets", ll(cat.counts.at("hyp_f")[4].count),
            ll(static_cast<long long>(back.facets->size())));
    auto orbits = orbit_partition_pairs_sym(*back.facets, 7);
    long long g = 0;
    for (const auto& o : orbits) g = std::gcd(g, static_cast<long long>(o.size()));
    rep.add("gcd", "HYP_7", "facet orbit gcd", "7", ll(g));
  }
  return rep;
}

Report verify_all(bool deep) {
  Report rep;
  for (Report r : {verify_table1_small(), verify_table2(), verify_table4(),
                   verify_totals(), verify_gcd(deep)})
    for (auto& row : r.rows) rep.rows.push_back(std::move(row));
  return rep;
}

}  // namespace hycone
