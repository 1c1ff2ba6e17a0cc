#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "binodal/io.hpp"

using namespace binodal;

TEST_CASE("jet JSON schema: accept and reject") {
  auto in = io::parse_jet_json(R"({
    "f": {"20": 1.0, "11": 0.5, "02": -1.0, "31": 0.25},
    "g": {"02": 2.0, "30": 1.0}
  })");
  CHECK(in.f.coeff(2, 0) == 1.0);
  CHECK(in.f.coeff(3, 1) == 0.25);
  CHECK(in.f.base_offset == 0.0);
  CHECK(in.g.coeff(0, 2) == 2.0);
  CHECK(in.g.base_offset == 1.0);
  CHECK_FALSE(in.f_family.has_value());

  CHECK_THROWS_AS(io::parse_jet_json(R"({"f": {"20": 1}})"), io::ParseError);
  CHECK_THROWS_AS(io::parse_jet_json(R"({"g": {"20": 1}})"), io::ParseError);
  CHECK_THROWS_AS(io::parse_jet_json("not json"), io::ParseError);
  CHECK_THROWS_AS(io::parse_jet_json(R"([1,2])"), io::ParseError);
  // degree below 2 in an f/g block
  CHECK_THROWS_AS(io::parse_jet_json(R"({"f": {"10": 1, "02": 1}, "g": {"02": 1}})"),
                  io::ParseError);
  // degree above 4 anywhere
  CHECK_THROWS_AS(io::parse_jet_json(R"({"f": {"32": 1, "02": 1}, "g": {"02": 1}})"),
                  io::ParseError);
  // malformed keys
  CHECK_THROWS_AS(io::parse_jet_json(R"({"f": {"2": 1}, "g": {"02": 1}})"),
                  io::ParseError);
  CHECK_THROWS_AS(io::parse_jet_json(R"({"f": {"ab": 1}, "g": {"02": 1}})"),
                  io::ParseError);
  // non-numeric value
  CHECK_THROWS_AS(io::parse_jet_json(R"({"f": {"20": "x"}, "g": {"02": 1}})"),
                  io::ParseError);
}

TEST_CASE("tau blocks allow degree 1 and produce family jets") {
  auto in = io::parse_jet_json(R"({
    "f": {"02": 1.0, "30": 1.0},
    "g": {"20": 1.0, "11": 2.0, "02": 1.0, "30": 1.0},
    "g_tau1": {"10": 0.5, "02": -0.25}
  })");
  REQUIRE(in.g_family.has_value());
  CHECK(in.g_family->coeff(1, 0, 1) == 0.5);
  CHECK(in.g_family->coeff(0, 2, 1) == -0.25);
  REQUIRE(in.f_family.has_value());
  CHECK(in.f_family->tau1.empty());
  // degree 0 stays illegal in tau blocks
  CHECK_THROWS_AS(io::parse_jet_json(R"({
    "f": {"02": 1.0}, "g": {"02": 1.0}, "g_tau1": {"00": 1.0}
  })"),
                  io::ParseError);
}

TEST_CASE("trace CSV layout") {
  TraceResult iso;
  iso.isolated = true;
  std::string s = io::trace_csv(iso);
  CHECK(s.find("index,s,u,v,x,y,res,cusp_M,cusp_N\n") == 0);
  CHECK(s.find("# isolated") != std::string::npos);

  TraceResult two;
  for (int b = 0; b < 2; ++b) {
    BinodalCurve c;
    for (int i = 0; i < 3; ++i) {
      c.points.push_back({0.1 * i, 0, 0.1 * i, 0});
      c.arclength.push_back(0.2 * i);
      c.residual.push_back(1e-13);
    }
    c.cusp_indices_N.push_back(1);
    two.curves.push_back(c);
  }
  std::string t = io::trace_csv(two);
  CHECK(t.find("# branch 2") != std::string::npos);
  // cusp flag set on the middle row of each branch
  CHECK(t.find(",1e-13,0,1\n") != std::string::npos);
  // 17-significant-digit round trip
  CHECK(io::fmt(0.1) == "0.10000000000000001");
  CHECK(std::stod(io::fmt(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("OBJ output counts vertices and faces") {
  TieLineMesh mesh;
  mesh.vertices = {{0, 0, 0}, {0, 1, 0}, {0.1, 0, 0}, {0.1, 1, 0}};
  mesh.faces = {{0, 1, 3, 2}};
  std::string s = io::obj_text(mesh);
  CHECK(s == "v 0 0 0\nv 0 1 0\nv 0.10000000000000001 0 0\nv 0.10000000000000001 1 0\n"
             "f 1 2 4 3\n");

  nf::NormalFormSpec spec{CaseLabel::C3hat, 1, 1, 1, 0.0};
  auto patch = nf::criminant_numeric(spec, 5, 5);
  std::string obj = io::obj_text(patch);
  int vcount = 0, fcount = 0;
  for (size_t pos = 0; (pos = obj.find("\nv ", pos)) != std::string::npos; ++pos) ++vcount;
  for (size_t pos = 0; (pos = obj.find("\nf ", pos)) != std::string::npos; ++pos) ++fcount;
  CHECK(vcount + 1 == 25 + 4);      // 5x5 samples + redundant plane (first v not counted)
  CHECK(fcount == 16 + 1);          // 4x4 quads + the plane
}

TEST_CASE("case report JSON carries the schema fields") {
  CaseReport rep;
  rep.label = CaseLabel::C3starMinus;
  rep.normal_form = "form";
  rep.c3 = -1.0;
  rep.beaks_sign = 1;
  rep.conditions.push_back({"g02", 1.0, false, true, 0.9});
  std::string s = io::case_report_json(rep);
  CHECK(s.find("\"label\": \"C3starMinus\"") != std::string::npos);
  CHECK(s.find("\"beaks_sign\": \"+\"") != std::string::npos);
  CHECK(s.find("\"required\": \"nonzero\"") != std::string::npos);
  CHECK(s.find("\"satisfied\": true") != std::string::npos);

  CaseReport un;
  un.label = CaseLabel::Unclassified;
  std::string u = io::case_report_json(un);
  CHECK(u.find("\"c3\": null") != std::string::npos);
  CHECK(u.find("\"beaks_sign\": null") != std::string::npos);
}

TEST_CASE("atomic_write creates parents and replaces atomically") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "binodal_io_test";
  fs::remove_all(dir);
  fs::path target = dir / "sub" / "out.csv";
  io::atomic_write(target.string(), "a,b\n1,2\n");
  std::ifstream is(target);
  std::string line;
  std::getline(is, line);
  CHECK(line == "a,b");
  io::atomic_write(target.string(), "c\n");
  std::ifstream is2(target);
  std::getline(is2, line);
  CHECK(line == "c");
  CHECK_FALSE(fs::exists(target.string() + ".tmp"));
  fs::remove_all(dir);
}

TEST_CASE("nf binodal CSV columns") {
  nf::NormalFormSpec spec{CaseLabel::C3starMinus, 1, 1, 1, -0.1};
  auto branches = nf::binodal_from_normal_form(spec, 21);
  std::string s = io::nf_binodal_csv(branches);
  CHECK(s.rfind("q1,q2,q3,u,eps\n", 0) == 0);
  CHECK(s.find("# branch 2") != std::string::npos);
}
