#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamlift/cayley.hpp"
#include "hamlift/graph.hpp"
#include "hamlift/lifting.hpp"
#include "hamlift/permgroup.hpp"
#include "hamlift/pipeline.hpp"

namespace hamlift {

/// File-format errors; messages start with "path:line:".
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Group files: '#' starts a comment, blank lines are skipped, the first
/// content line is "degree N" and every further line is one generator as N
/// space-separated images.
PermGroup read_group(const std::filesystem::path& file);
void write_group(const std::filesystem::path& file, const PermGroup& group);

/// Graph files: "vertices N" header, then one edge "u v" per line with u < v.
Graph read_graph(const std::filesystem::path& file);
void write_graph(const std::filesystem::path& file, const Graph& g);

/// Certificates: "cycle" or "path" on the first content line, the vertex
/// sequence on the second.
HamiltonCertificate read_certificate(const std::filesystem::path& file);
void write_certificate(const std::filesystem::path& file, const HamiltonCertificate& cert);

/// Cayley specs: "group <path>" (resolved against the spec file's directory),
/// then "S: i j ..." listing the connection set by element index.
CayleySpec read_cayley_spec(const std::filesystem::path& file);

std::string to_dot(const Graph& g, const std::string& name);

/// Traces: one "<number> <anchor> <verdict>" line per step.
void write_trace(const std::filesystem::path& file, const std::vector<TraceStep>& trace);

}  // namespace hamlift
