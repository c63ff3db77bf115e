#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "moduli/rational.hpp"

namespace moduli {

using Mark = int;
using MarkSet = std::set<Mark>;

struct Vertex {
  std::string id;
  MarkSet marks;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Undirected; `a == b` is a loop.
struct Edge {
  std::string id;
  std::string a;
  std::string b;
  Rational length;

  bool is_loop() const { return a == b; }
  // The endpoint opposite to `v` (v itself for a loop).
  const std::string& other(const std::string& v) const { return v == a ? b : a; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A finite metric multigraph with marks on vertices. Loops and parallel
// edges are allowed. Values are plain data; validity is checked by
// validate() and enforced by the operations that require it.
struct MetricGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  const Vertex* find_vertex(const std::string& id) const;
  const Edge* find_edge(const std::string& id) const;

  friend bool operator==(const MetricGraph&, const MetricGraph&) = default;
};

enum class ViolationCode {
  NonPositiveLength,
  DuplicateVertexId,
  DuplicateEdgeId,
  UnknownEndpoint,
  NonPositiveMark,
  DuplicateMark,
  MissingMark,
};

struct Violation {
  ViolationCode code;
  std::string subject;  // offending vertex or edge id, if any
  Mark mark = 0;        // offending mark label, if any

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

const char* to_string(ViolationCode code);

std::vector<Violation> validate(const MetricGraph& g);
bool is_valid(const MetricGraph& g);
// Throws DomainError listing the violations.
void require_valid(const MetricGraph& g);

// Largest mark present, 0 for an unmarked graph.
Mark mark_count(const MetricGraph& g);

std::vector<std::vector<std::string>> components(const MetricGraph& g);
bool is_connected(const MetricGraph& g);

// First Betti number |E| - |V| + #components.
int genus(const MetricGraph& g);

// Loops count twice.
std::map<std::string, int> valencies(const MetricGraph& g);

Rational total_length(const MetricGraph& g);

// Merges the endpoints of a non-loop edge. The merged vertex keeps the
// lexicographically smaller id and the union of both mark sets.
MetricGraph contract_edge(const MetricGraph& g, const std::string& edge_id);

nlohmann::json graph_to_json(const MetricGraph& g);
// Structural parse only; call validate() for the graph invariants.
MetricGraph graph_from_json(const nlohmann::json& j);

// Shared by the graph and marked-cycle formats; `where` prefixes errors.
MarkSet marks_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace moduli
