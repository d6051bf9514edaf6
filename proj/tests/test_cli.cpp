#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "hamlift/catalog.hpp"
#include "hamlift/io.hpp"
#include "hamlift/lifting.hpp"

using namespace hamlift;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int code;
  std::string output;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + HAMLIFT_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "hamlift-cli-tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("catalog list and show") {
  CmdResult list = run_cli("catalog list");
  CHECK(list.code == 0);
  CHECK(count_lines(list.output) == 35);
  CHECK(contains(list.output, "z9-cycle"));
  CHECK(contains(list.output, "petersen-f20"));

  CmdResult show = run_cli("catalog show z6-chord");
  CHECK(show.code == 0);
  CHECK(contains(show.output, "name: z6-chord"));
  CHECK(contains(show.output, "vertices: 6"));
  CHECK(contains(show.output, "group order: 6"));
  CHECK(contains(show.output, "cayley: connection of size 3"));

  CmdResult unknown = run_cli("catalog show nope");
  CHECK(unknown.code == 1);
  CHECK(contains(unknown.output, "error: unknown catalog entry: nope"));
}

TEST_CASE("hamilton on a catalog entry, with certificate and trace files") {
  fs::path cert = scratch() / "z9.cert";
  fs::path trace = scratch() / "z9.trace";
  CmdResult r = run_cli("hamilton --catalog z9-cycle --cert " + cert.string() + " --trace " +
                        trace.string());
  CHECK(r.code == 0);
  CHECK(contains(r.output, "hamilton cycle (constructive): 0 1 2 3 4 5 6 7 8"));
  CHECK(contains(r.output, "connected-graph ok"));
  CHECK(contains(r.output, "abelian-group order=9"));

  HamiltonCertificate c = read_certificate(cert);
  CHECK(c.kind == CertKind::cycle);
  CHECK(c.vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});

  std::ifstream tf(trace);
  std::string first;
  std::getline(tf, first);
  CHECK(first == "1 connected-graph ok");
}

TEST_CASE("hamilton from graph and group files") {
  const CatalogEntry& z9 = catalog_entry("z9-cycle");
  fs::path graph = scratch() / "z9.graph";
  fs::path group = scratch() / "z9.group";
  write_graph(graph, z9.graph);
  write_group(group, z9.group);
  CmdResult r = run_cli("hamilton --graph " + graph.string() + " --group " + group.string());
  CHECK(r.code == 0);
  CHECK(contains(r.output, "hamilton cycle (constructive): 0 1 2 3 4 5 6 7 8"));

  CmdResult missing = run_cli("hamilton --graph " + graph.string());
  CHECK(missing.code != 0);
}

TEST_CASE("hamilton reports the exceptional graph and violations by exit code") {
  CmdResult pet = run_cli("hamilton --catalog petersen-f20");
  CHECK(pet.code == 2);
  CHECK(contains(pet.output, "no hamilton cycle: this is the exceptional graph"));
  CHECK(contains(pet.output, "petersen-recognition exception"));

  CmdResult petpath = run_cli("hamilton --catalog petersen-f20 --path");
  CHECK(petpath.code == 0);
  CHECK(contains(petpath.output, "hamilton path (oracle:petersen-path): "));

  CmdResult s4 = run_cli("hamilton --catalog s4-regular");
  CHECK(s4.code == 1);
  CHECK(contains(s4.output, "hypothesis violated [commutator-cyclic-prime-power]"));

  CmdResult k2 = run_cli("hamilton --catalog k2-path");
  CHECK(k2.code == 1);
  CHECK(contains(k2.output, "hypothesis violated [minimum-order]"));

  CmdResult k2path = run_cli("hamilton --catalog k2-path --path");
  CHECK(k2path.code == 0);
  CHECK(contains(k2path.output, "hamilton path (constructive): 0 1"));
}

TEST_CASE("verify checks certificates against graph files") {
  const CatalogEntry& z6 = catalog_entry("z6-cycle");
  fs::path graph = scratch() / "z6.graph";
  fs::path good = scratch() / "good.cert";
  fs::path bad = scratch() / "bad.cert";
  write_graph(graph, z6.graph);
  write_certificate(good, {CertKind::cycle, {0, 1, 2, 3, 4, 5}});
  write_certificate(bad, {CertKind::cycle, {0, 2, 4, 1, 3, 5}});

  CmdResult ok = run_cli("verify --graph " + graph.string() + " --cert " + good.string());
  CHECK(ok.code == 0);
  CHECK(contains(ok.output, "valid"));

  CmdResult no = run_cli("verify --graph " + graph.string() + " --cert " + bad.string());
  CHECK(no.code == 1);
  CHECK(contains(no.output, "invalid"));
}

TEST_CASE("oracle statuses map to exit codes") {
  CmdResult none = run_cli("oracle --catalog petersen-f20");
  CHECK(none.code == 2);
  CHECK(contains(none.output, "none exists ("));

  CmdResult path = run_cli("oracle --catalog petersen-f20 --path");
  CHECK(path.code == 0);
  CHECK(contains(path.output, "found ("));

  CmdResult tight = run_cli("oracle --catalog z16-moebius --budget 3");
  CHECK(tight.code == 3);
  CHECK(contains(tight.output, "budget exceeded ("));

  fs::path cert = scratch() / "z5.cert";
  CmdResult z5 = run_cli("oracle --catalog z5-cycle --cert " + cert.string());
  CHECK(z5.code == 0);
  CHECK(contains(z5.output, "expansions): 0 1 2 3 4"));
  CHECK(read_certificate(cert).vertices == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("cq-edge drives the abelian solver through a chosen edge") {
  CmdResult r = run_cli("cq-edge --catalog z6-chord --edge 0 3");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "cycle: 0 3 "));

  CmdResult nocayley = run_cli("cq-edge --catalog d5-pentagon --edge 0 1");
  CHECK(nocayley.code == 1);
  CHECK(contains(nocayley.output, "has no cayley description"));

  CmdResult nonabelian = run_cli("cq-edge --catalog d3-prism --edge 0 1");
  CHECK(nonabelian.code == 1);
  CHECK(contains(nonabelian.output, "error: group is not abelian"));
}

TEST_CASE("quotient prints block counts") {
  CmdResult derived = run_cli("quotient --catalog d5-cayley --derived");
  CHECK(derived.code == 0);
  CHECK(contains(derived.output, "blocks: 2"));

  CmdResult full = run_cli("quotient --catalog d5-cayley");
  CHECK(full.code == 0);
  CHECK(contains(full.output, "blocks: 1"));
}

TEST_CASE("reduce strips removable orbits") {
  fs::path out = scratch() / "z5k5-reduced.graph";
  CmdResult r = run_cli("reduce --catalog z5-k5 --out " + out.string());
  CHECK(r.code == 0);
  CHECK(contains(r.output, "kept orbits: 1"));
  CHECK(contains(r.output, "removed orbits: 1"));
  CHECK(contains(r.output, "edges: 10 -> 5"));
  Graph reduced = read_graph(out);
  CHECK(reduced.edge_count() == 5);
  CHECK(is_connected(reduced));
}

TEST_CASE("export-dot writes quoted graph names") {
  fs::path out = scratch() / "z3.dot";
  CmdResult r = run_cli("export-dot --catalog z3-cycle --out " + out.string());
  CHECK(r.code == 0);
  std::ifstream in(out);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "graph \"z3-cycle\" {\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");

  CmdResult noout = run_cli("export-dot --catalog z3-cycle");
  CHECK(noout.code != 0);
}

TEST_CASE("sweep runs the capped catalog") {
  CmdResult r = run_cli("sweep --max-order 12");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "violation:minimum-order"));
  CHECK(contains(r.output, "exception"));
  CHECK(contains(r.output, "z9-cycle"));
  CHECK_FALSE(contains(r.output, "s4-regular"));
  CHECK_FALSE(contains(r.output, "NO"));
}
