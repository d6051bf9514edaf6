#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamlift/abelian_ham.hpp"
#include "hamlift/action.hpp"
#include "hamlift/catalog.hpp"
#include "hamlift/io.hpp"
#include "hamlift/oracle.hpp"
#include "hamlift/pipeline.hpp"

namespace {

using namespace hamlift;

struct Instance {
  Graph graph;
  PermGroup group;
  std::string label;
};

Instance load_instance(const std::string& catalog_name, const std::string& graph_file,
                       const std::string& group_file) {
  if (!catalog_name.empty()) {
    const CatalogEntry& e = catalog_entry(catalog_name);
    return Instance{e.graph, e.group, e.name};
  }
  if (graph_file.empty() || group_file.empty())
    throw std::runtime_error("need either --catalog or both --graph and --group");
  return Instance{read_graph(graph_file), read_group(group_file),
                  std::filesystem::path(graph_file).stem().string()};
}

Graph load_graph_only(const std::string& catalog_name, const std::string& graph_file) {
  if (!catalog_name.empty()) return catalog_entry(catalog_name).graph;
  if (graph_file.empty()) throw std::runtime_error("need either --catalog or --graph");
  return read_graph(graph_file);
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

std::string method_label(bool oracle_assisted, const std::vector<std::string>& tags) {
  if (!oracle_assisted) return "constructive";
  std::string out = "oracle:";
  for (std::size_t i = 0; i < tags.size(); ++i) out += (i ? "," : "") + tags[i];
  return out;
}

void print_trace(const std::vector<TraceStep>& trace) {
  for (const auto& step : trace)
    std::cout << "  " << std::setw(2) << step.number << " " << step.anchor << " " << step.verdict
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamilton cycle constructions on vertex-transitive graphs"};
  app.require_subcommand(1);
  int rc = 0;

  // catalog
  auto* cat = app.add_subcommand("catalog", "inspect the bundled graph catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "one line per entry");
  cat_list->callback([&]() {
    for (const auto& e : catalog())
      std::cout << std::left << std::setw(18) << e.name << " n=" << std::setw(3)
                << e.graph.vertex_count() << " " << e.summary << "\n";
  });
  std::string show_name;
  auto* cat_show = cat->add_subcommand("show", "details of one entry");
  cat_show->add_option("name", show_name, "entry name")->required();
  cat_show->callback([&]() {
    const CatalogEntry& e = catalog_entry(show_name);
    std::cout << "name: " << e.name << "\n"
              << "summary: " << e.summary << "\n"
              << "vertices: " << e.graph.vertex_count() << "\n"
              << "edges: " << e.graph.edge_count() << "\n"
              << "group order: " << e.group.order() << "\n"
              << "group degree: " << e.group.degree() << "\n"
              << "cayley: "
              << (e.cayley ? "connection of size " + std::to_string(e.cayley->connection.size())
                           : std::string("none"))
              << "\n";
    for (const auto& g : e.group.generators()) {
      std::cout << "generator:";
      for (int v = 0; v < g.degree(); ++v) std::cout << " " << g(v);
      std::cout << "\n";
    }
  });

  // hamilton
  struct {
    std::string catalog_name, graph_file, group_file, cert_out, trace_out;
    bool path = false;
  } ham;
  auto* hamc = app.add_subcommand("hamilton", "construct a hamilton cycle (or path) with trace");
  auto* hg = hamc->add_option("--graph", ham.graph_file, "graph file");
  auto* hgr = hamc->add_option("--group", ham.group_file, "group file");
  auto* hc = hamc->add_option("--catalog", ham.catalog_name, "catalog entry");
  hg->needs(hgr);
  hgr->needs(hg);
  hc->excludes(hg);
  hamc->add_flag("--path", ham.path, "construct a hamilton path instead of a cycle");
  hamc->add_option("--cert", ham.cert_out, "write the certificate to this file");
  hamc->add_option("--trace", ham.trace_out, "write the decomposition trace to this file");
  hamc->callback([&]() {
    Instance in = load_instance(ham.catalog_name, ham.graph_file, ham.group_file);
    if (ham.path) {
      PathReport r = hamilton_path(in.graph, in.group);
      print_trace(r.trace);
      std::cout << "hamilton path (" << method_label(r.oracle_assisted, r.oracle_tags)
                << "): " << join(r.path) << "\n";
      if (!ham.cert_out.empty())
        write_certificate(ham.cert_out, HamiltonCertificate{CertKind::path, r.path});
      if (!ham.trace_out.empty()) write_trace(ham.trace_out, r.trace);
      return;
    }
    HamiltonReport r = hamiltonize(in.graph, in.group);
    print_trace(r.trace);
    if (!ham.trace_out.empty()) write_trace(ham.trace_out, r.trace);
    if (r.petersen_exception) {
      std::cout << "no hamilton cycle: this is the exceptional graph\n";
      rc = 2;
      return;
    }
    std::cout << "hamilton cycle (" << method_label(r.oracle_assisted, r.oracle_tags)
              << "): " << join(r.cycle) << "\n";
    if (!ham.cert_out.empty())
      write_certificate(ham.cert_out, HamiltonCertificate{CertKind::cycle, r.cycle});
  });

  // verify
  struct {
    std::string graph_file, cert_file;
  } ver;
  auto* verc = app.add_subcommand("verify", "check a certificate against a graph");
  verc->add_option("--graph", ver.graph_file, "graph file")->required();
  verc->add_option("--cert", ver.cert_file, "certificate file")->required();
  verc->callback([&]() {
    Graph g = read_graph(ver.graph_file);
    HamiltonCertificate c = read_certificate(ver.cert_file);
    bool ok = verify_certificate(g, c);
    std::cout << (ok ? "valid" : "invalid") << "\n";
    rc = ok ? 0 : 1;
  });

  // oracle
  struct {
    std::string catalog_name, graph_file, cert_out;
    bool path = false;
    long long budget = 100000000;
  } ora;
  auto* orac = app.add_subcommand("oracle", "exhaustive hamilton search (no group needed)");
  auto* og = orac->add_option("--graph", ora.graph_file, "graph file");
  orac->add_option("--catalog", ora.catalog_name, "catalog entry")->excludes(og);
  orac->add_flag("--path", ora.path, "search for a hamilton path");
  orac->add_option("--budget", ora.budget, "node expansion budget");
  orac->add_option("--cert", ora.cert_out, "write the certificate to this file");
  orac->callback([&]() {
    Graph g = load_graph_only(ora.catalog_name, ora.graph_file);
    OracleResult r = ora.path ? find_hamilton_path(g, ora.budget)
                              : find_hamilton_cycle(g, ora.budget);
    if (r.status == OracleStatus::found) {
      std::cout << "found (" << r.expansions << " expansions): " << join(r.vertices) << "\n";
      if (!ora.cert_out.empty())
        write_certificate(ora.cert_out,
                          HamiltonCertificate{ora.path ? CertKind::path : CertKind::cycle,
                                              r.vertices});
    } else if (r.status == OracleStatus::none_exists) {
      std::cout << "none exists (" << r.expansions << " expansions)\n";
      rc = 2;
    } else {
      std::cout << "budget exceeded (" << r.expansions << " expansions)\n";
      rc = 3;
    }
  });

  // cq-edge
  struct {
    std::string catalog_name, cayley_file, cert_out;
    std::vector<int> edge;
  } cq;
  auto* cqc = app.add_subcommand("cq-edge",
                                 "hamilton cycle through a chosen edge of an abelian cayley graph");
  auto* cqf = cqc->add_option("--cayley", cq.cayley_file, "cayley spec file");
  cqc->add_option("--catalog", cq.catalog_name, "catalog entry with a cayley description")
      ->excludes(cqf);
  cqc->add_option("--edge", cq.edge, "edge endpoints (element indices)")->expected(2)->required();
  cqc->add_option("--cert", cq.cert_out, "write the certificate to this file");
  cqc->callback([&]() {
    std::optional<CayleySpec> spec;
    if (!cq.cayley_file.empty()) {
      spec = read_cayley_spec(cq.cayley_file);
    } else if (!cq.catalog_name.empty()) {
      const CatalogEntry& e = catalog_entry(cq.catalog_name);
      if (!e.cayley)
        throw std::runtime_error("catalog entry '" + e.name + "' has no cayley description");
      spec = *e.cayley;
    } else {
      throw std::runtime_error("need either --cayley or --catalog");
    }
    std::vector<int> cycle = hamilton_cycle_through_edge(*spec, {cq.edge[0], cq.edge[1]});
    std::cout << "cycle: " << join(cycle) << "\n";
    if (!cq.cert_out.empty())
      write_certificate(cq.cert_out, HamiltonCertificate{CertKind::cycle, cycle});
  });

  // quotient
  struct {
    std::string catalog_name, graph_file, group_file, out, dot;
    bool derived = false;
  } quo;
  auto* quoc = app.add_subcommand("quotient", "block graph of the group (or derived) orbits");
  auto* qg = quoc->add_option("--graph", quo.graph_file, "graph file");
  auto* qgr = quoc->add_option("--group", quo.group_file, "group file");
  auto* qc = quoc->add_option("--catalog", quo.catalog_name, "catalog entry");
  qg->needs(qgr);
  qgr->needs(qg);
  qc->excludes(qg);
  quoc->add_flag("--derived", quo.derived, "quotient by the commutator subgroup's orbits");
  quoc->add_option("--out", quo.out, "write the block graph to this file");
  quoc->add_option("--dot", quo.dot, "write the block graph in dot format");
  quoc->callback([&]() {
    Instance in = load_instance(quo.catalog_name, quo.graph_file, quo.group_file);
    require_automorphism_action(in.graph, in.group);
    QuotientMap q = orbit_partition(quo.derived ? commutator_subgroup(in.group) : in.group);
    BlockQuotient bq = quotient_graph(in.graph, q);
    int edged = 0;
    for (char f : bq.block_has_inner_edge) edged += f ? 1 : 0;
    std::cout << "blocks: " << q.block_count() << "\nedges: " << bq.graph.edge_count()
              << "\nblocks with inner edges: " << edged << "\n";
    if (!quo.out.empty()) write_graph(quo.out, bq.graph);
    if (!quo.dot.empty()) {
      std::ofstream f(quo.dot);
      if (!f) throw std::runtime_error("cannot open " + quo.dot + " for writing");
      f << to_dot(bq.graph, in.label + "_quotient");
    }
  });

  // reduce
  struct {
    std::string catalog_name, graph_file, group_file, out, dot;
  } red;
  auto* redc = app.add_subcommand("reduce", "strip removable invariant edge orbits");
  auto* rg = redc->add_option("--graph", red.graph_file, "graph file");
  auto* rgr = redc->add_option("--group", red.group_file, "group file");
  auto* rcopt = redc->add_option("--catalog", red.catalog_name, "catalog entry");
  rg->needs(rgr);
  rgr->needs(rg);
  rcopt->excludes(rg);
  redc->add_option("--out", red.out, "write the reduced graph to this file");
  redc->add_option("--dot", red.dot, "write the reduced graph in dot format");
  redc->callback([&]() {
    Instance in = load_instance(red.catalog_name, red.graph_file, red.group_file);
    ReducedGraph r = g_minimal_reduce(in.graph, in.group);
    std::cout << "kept orbits: " << r.kept_orbits.size()
              << "\nremoved orbits: " << r.removed_orbits.size()
              << "\nedges: " << in.graph.edge_count() << " -> " << r.graph.edge_count() << "\n";
    if (!red.out.empty()) write_graph(red.out, r.graph);
    if (!red.dot.empty()) {
      std::ofstream f(red.dot);
      if (!f) throw std::runtime_error("cannot open " + red.dot + " for writing");
      f << to_dot(r.graph, in.label + "_reduced");
    }
  });

  // export-dot
  struct {
    std::string catalog_name, graph_file, out;
  } dot;
  auto* dotc = app.add_subcommand("export-dot", "write a graph in dot format");
  auto* dg = dotc->add_option("--graph", dot.graph_file, "graph file");
  dotc->add_option("--catalog", dot.catalog_name, "catalog entry")->excludes(dg);
  dotc->add_option("--out", dot.out, "output file")->required();
  dotc->callback([&]() {
    Graph g = load_graph_only(dot.catalog_name, dot.graph_file);
    std::string label = !dot.catalog_name.empty()
                            ? dot.catalog_name
                            : std::filesystem::path(dot.graph_file).stem().string();
    std::ofstream f(dot.out);
    if (!f) throw std::runtime_error("cannot open " + dot.out + " for writing");
    f << to_dot(g, label);
  });

  // sweep
  struct {
    int max_order = 0;
    std::string report;
  } sw;
  auto* swc = app.add_subcommand("sweep", "run the construction over the whole catalog");
  swc->add_option("--max-order", sw.max_order, "skip entries with more vertices than this");
  swc->add_option("--report", sw.report, "also write the table to this file");
  swc->callback([&]() {
    std::ostringstream table;
    table << std::left << std::setw(18) << "name" << std::setw(5) << "n" << std::setw(41)
          << "outcome" << std::setw(27) << "method" << "verified\n";
    for (const auto& e : catalog()) {
      if (sw.max_order > 0 && e.graph.vertex_count() > sw.max_order) continue;
      std::string outcome, method = "-", verified = "-";
      try {
        HamiltonReport r = hamiltonize(e.graph, e.group);
        if (r.petersen_exception) {
          outcome = "exception";
          verified = "yes";  // confirmed by exhaustive search inside the run
        } else {
          outcome = "cycle";
          method = method_label(r.oracle_assisted, r.oracle_tags);
          bool ok = verify_certificate(e.graph, HamiltonCertificate{CertKind::cycle, r.cycle});
          verified = ok ? "yes" : "NO";
          if (!ok) rc = 1;
        }
      } catch (const HypothesisViolation& ex) {
        outcome = "violation:" + ex.anchor();
      }
      table << std::left << std::setw(18) << e.name << std::setw(5) << e.graph.vertex_count()
            << std::setw(41) << outcome << std::setw(27) << method << verified << "\n";
    }
    std::cout << table.str();
    if (!sw.report.empty()) {
      std::ofstream f(sw.report);
      if (!f) throw std::runtime_error("cannot open " + sw.report + " for writing");
      f << table.str();
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violated [" << e.anchor() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
