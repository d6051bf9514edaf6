#include "hamlift/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hamlift {
namespace {

struct Line {
  int number;
  std::string text;
};

[[noreturn]] void fail(const std::filesystem::path& file, int line, const std::string& message) {
  throw ParseError(file.string() + ":" + std::to_string(line) + ": " + message);
}

/// Content lines only: comments stripped, surrounding blanks trimmed.
std::vector<Line> read_lines(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string() + ":0: cannot open file");
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto is_blank = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!raw.empty() && is_blank(static_cast<unsigned char>(raw.back()))) raw.pop_back();
    std::size_t head = 0;
    while (head < raw.size() && is_blank(static_cast<unsigned char>(raw[head]))) ++head;
    raw.erase(0, head);
    if (!raw.empty()) out.push_back(Line{number, raw});
  }
  return out;
}

std::vector<long> parse_numbers(const std::filesystem::path& file, const Line& line,
                                const std::string& what) {
  std::istringstream in(line.text);
  std::vector<long> out;
  long v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) fail(file, line.number, "expected only " + what);
  return out;
}

std::ofstream open_out(const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  return out;
}

}  // namespace

PermGroup read_group(const std::filesystem::path& file) {
  std::vector<Line> lines = read_lines(file);
  if (lines.empty()) throw ParseError(file.string() + ":0: empty group file");
  std::istringstream head(lines[0].text);
  std::string keyword;
  int degree = 0;
  if (!(head >> keyword >> degree) || keyword != "degree" || degree <= 0 || !(head >> std::ws).eof())
    fail(file, lines[0].number, "expected header 'degree N'");
  std::vector<Permutation> generators;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<long> images = parse_numbers(file, lines[i], "permutation images");
    if (static_cast<int>(images.size()) != degree)
      fail(file, lines[i].number,
           "expected " + std::to_string(degree) + " images, got " + std::to_string(images.size()));
    std::vector<int> img(images.begin(), images.end());
    try {
      generators.emplace_back(std::move(img));
    } catch (const std::invalid_argument& e) {
      fail(file, lines[i].number, e.what());
    }
  }
  return PermGroup(degree, std::move(generators));
}

void write_group(const std::filesystem::path& file, const PermGroup& group) {
  std::ofstream out = open_out(file);
  out << "degree " << group.degree() << "\n";
  for (const auto& g : group.generators()) {
    for (int v = 0; v < group.degree(); ++v) out << (v ? " " : "") << g(v);
    out << "\n";
  }
}

Graph read_graph(const std::filesystem::path& file) {
  std::vector<Line> lines = read_lines(file);
  if (lines.empty()) throw ParseError(file.string() + ":0: empty graph file");
  std::istringstream head(lines[0].text);
  std::string keyword;
  int n = 0;
  if (!(head >> keyword >> n) || keyword != "vertices" || n < 0 || !(head >> std::ws).eof())
    fail(file, lines[0].number, "expected header 'vertices N'");
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<long> pair = parse_numbers(file, lines[i], "edge endpoints");
    if (pair.size() != 2) fail(file, lines[i].number, "expected an edge 'u v'");
    int u = static_cast<int>(pair[0]), v = static_cast<int>(pair[1]);
    if (u < 0 || v >= n) fail(file, lines[i].number, "edge endpoint out of range");
    if (u >= v) fail(file, lines[i].number, "edges must be listed as 'u v' with u < v");
    if (!seen.insert({u, v}).second) fail(file, lines[i].number, "duplicate edge");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

void write_graph(const std::filesystem::path& file, const Graph& g) {
  std::ofstream out = open_out(file);
  out << "vertices " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

HamiltonCertificate read_certificate(const std::filesystem::path& file) {
  std::vector<Line> lines = read_lines(file);
  if (lines.size() != 2)
    throw ParseError(file.string() + ":0: expected a kind line and a vertex line");
  CertKind kind;
  if (lines[0].text == "cycle")
    kind = CertKind::cycle;
  else if (lines[0].text == "path")
    kind = CertKind::path;
  else
    fail(file, lines[0].number, "expected 'cycle' or 'path'");
  std::vector<long> raw = parse_numbers(file, lines[1], "vertices");
  return HamiltonCertificate{kind, std::vector<int>(raw.begin(), raw.end())};
}

void write_certificate(const std::filesystem::path& file, const HamiltonCertificate& cert) {
  std::ofstream out = open_out(file);
  out << (cert.kind == CertKind::cycle ? "cycle" : "path") << "\n";
  for (std::size_t i = 0; i < cert.vertices.size(); ++i)
    out << (i ? " " : "") << cert.vertices[i];
  out << "\n";
}

CayleySpec read_cayley_spec(const std::filesystem::path& file) {
  std::vector<Line> lines = read_lines(file);
  if (lines.size() != 2)
    throw ParseError(file.string() + ":0: expected a group line and a connection line");
  std::istringstream head(lines[0].text);
  std::string keyword, rel;
  if (!(head >> keyword >> rel) || keyword != "group" || !(head >> std::ws).eof())
    fail(file, lines[0].number, "expected 'group <path>'");
  std::filesystem::path group_path(rel);
  if (group_path.is_relative()) group_path = file.parent_path() / group_path;
  PermGroup group = read_group(group_path);

  if (lines[1].text.rfind("S:", 0) != 0)
    fail(file, lines[1].number, "expected a connection line 'S: i j ...'");
  Line rest{lines[1].number, lines[1].text.substr(2)};
  std::vector<long> indices = parse_numbers(file, rest, "element indices");
  std::vector<Permutation> connection;
  for (long idx : indices) {
    if (idx < 0 || idx >= group.order())
      fail(file, lines[1].number, "element index " + std::to_string(idx) + " out of range");
    connection.push_back(group.elements()[static_cast<std::size_t>(idx)]);
  }
  return CayleySpec{std::move(group), std::move(connection)};
}

std::string to_dot(const Graph& g, const std::string& name) {
  bool bare = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) bare = false;
  std::ostringstream out;
  out << "graph " << (bare ? name : "\"" + name + "\"") << " {\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

void write_trace(const std::filesystem::path& file, const std::vector<TraceStep>& trace) {
  std::ofstream out = open_out(file);
  for (const auto& step : trace)
    out << step.number << " " << step.anchor << " " << step.verdict << "\n";
}

}  // namespace hamlift
