#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hamlift/catalog.hpp"
#include "hamlift/io.hpp"

using namespace hamlift;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "hamlift-io-tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_raw(const std::string& name, const std::string& content) {
  fs::path p = scratch() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

bool mentions_line(const std::exception& e, const std::string& suffix) {
  return std::string(e.what()).find(suffix) != std::string::npos;
}

}  // namespace

TEST_CASE("group files round-trip and tolerate comments") {
  const PermGroup& d4 = catalog_entry("d4-cayley").group;
  fs::path p = scratch() / "d4.grp";
  write_group(p, d4);
  CHECK(same_group(read_group(p), d4));

  fs::path commented = write_raw("commented.grp",
                                 "# rotation and reflection of a square\n"
                                 "\n"
                                 "degree 4   # header\n"
                                 "1 2 3 0\n"
                                 "\n"
                                 "0 3 2 1  # reflection\n");
  PermGroup g = read_group(commented);
  CHECK(g.degree() == 4);
  CHECK(g.order() == 8);
}

TEST_CASE("group file errors carry the line number") {
  fs::path bad_header = write_raw("badheader.grp", "order 4\n0 1 2 3\n");
  CHECK_THROWS_AS(read_group(bad_header), ParseError);
  try {
    read_group(bad_header);
  } catch (const ParseError& e) {
    CHECK(mentions_line(e, ":1: expected header 'degree N'"));
  }

  fs::path short_row = write_raw("shortrow.grp", "degree 4\n1 0 2\n");
  try {
    read_group(short_row);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(mentions_line(e, ":2:"));
  }

  fs::path not_bijective = write_raw("notbij.grp", "degree 3\n0 0 1\n");
  CHECK_THROWS_AS(read_group(not_bijective), ParseError);
  CHECK_THROWS_AS(read_group(scratch() / "does-not-exist.grp"), ParseError);
}

TEST_CASE("graph files round-trip") {
  const Graph& pet = catalog_entry("petersen-f20").graph;
  fs::path p = scratch() / "petersen.graph";
  write_graph(p, pet);
  CHECK(read_graph(p) == pet);
}

TEST_CASE("graph file errors carry the line number") {
  try {
    read_graph(write_raw("revedge.graph", "vertices 3\n1 0\n"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(mentions_line(e, ":2: edges must be listed as 'u v' with u < v"));
  }
  CHECK_THROWS_AS(read_graph(write_raw("range.graph", "vertices 3\n0 3\n")), ParseError);
  CHECK_THROWS_AS(read_graph(write_raw("dup.graph", "vertices 3\n0 1\n0 1\n")), ParseError);
  CHECK_THROWS_AS(read_graph(write_raw("header.graph", "nodes 3\n")), ParseError);
  CHECK_THROWS_AS(read_graph(write_raw("triple.graph", "vertices 3\n0 1 2\n")), ParseError);
}

TEST_CASE("certificates round-trip") {
  fs::path p = scratch() / "cycle.cert";
  write_certificate(p, {CertKind::cycle, {0, 1, 2, 3, 4}});
  HamiltonCertificate c = read_certificate(p);
  CHECK(c.kind == CertKind::cycle);
  CHECK(c.vertices == std::vector<int>{0, 1, 2, 3, 4});

  write_certificate(p, {CertKind::path, {2, 1, 0}});
  c = read_certificate(p);
  CHECK(c.kind == CertKind::path);
  CHECK(c.vertices == std::vector<int>{2, 1, 0});

  CHECK_THROWS_AS(read_certificate(write_raw("kind.cert", "walk\n0 1 2\n")), ParseError);
  CHECK_THROWS_AS(read_certificate(write_raw("extra.cert", "cycle\n0 1\n2 3\n")), ParseError);
}

TEST_CASE("cayley specs resolve the group path relative to the spec file") {
  fs::path grp = scratch() / "z6.grp";
  write_group(grp, catalog_entry("z6-cycle").cayley->group);
  fs::path spec = write_raw("z6.cayley", "group z6.grp\nS: 1 5\n");
  CayleySpec cs = read_cayley_spec(spec);
  CHECK(cs.group.order() == 6);
  CHECK(cs.connection.size() == 2);
  CHECK(cayley_graph(cs).vertex_count() == 6);

  CHECK_THROWS_AS(read_cayley_spec(write_raw("range.cayley", "group z6.grp\nS: 1 6\n")),
                  ParseError);
  CHECK_THROWS_AS(read_cayley_spec(write_raw("oneline.cayley", "group z6.grp\n")), ParseError);
}

TEST_CASE("dot export quotes names when needed") {
  Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(to_dot(triangle, "triangle") ==
        "graph triangle {\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
  CHECK(to_dot(triangle, "z5-k5") ==
        "graph \"z5-k5\" {\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
  CHECK(to_dot(triangle, "5cycle").rfind("graph \"5cycle\"", 0) == 0);
}

TEST_CASE("traces are written one step per line") {
  fs::path p = scratch() / "trace.txt";
  write_trace(p, {{1, "connected-graph", "ok"}, {2, "minimum-order", "n=9"}});
  std::ifstream in(p);
  std::string l1, l2;
  std::getline(in, l1);
  std::getline(in, l2);
  CHECK(l1 == "1 connected-graph ok");
  CHECK(l2 == "2 minimum-order n=9");
}
