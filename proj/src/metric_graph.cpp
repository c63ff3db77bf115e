#include "moduli/metric_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "moduli/errors.hpp"

namespace moduli {

using nlohmann::json;

const Vertex* MetricGraph::find_vertex(const std::string& id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const Edge* MetricGraph::find_edge(const std::string& id) const {
  for (const auto& e : edges) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::NonPositiveLength: return "NonPositiveLength";
    case ViolationCode::DuplicateVertexId: return "DuplicateVertexId";
    case ViolationCode::DuplicateEdgeId: return "DuplicateEdgeId";
    case ViolationCode::UnknownEndpoint: return "UnknownEndpoint";
    case ViolationCode::NonPositiveMark: return "NonPositiveMark";
    case ViolationCode::DuplicateMark: return "DuplicateMark";
    case ViolationCode::MissingMark: return "MissingMark";
  }
  return "Unknown";
}

std::string Violation::describe() const {
  std::string out = to_string(code);
  if (mark != 0) out += "(" + std::to_string(mark) + ")";
  if (!subject.empty()) out += " at " + subject;
  return out;
}

std::vector<Violation> validate(const MetricGraph& g) {
  std::vector<Violation> out;

  std::set<std::string> vertex_ids;
  for (const auto& v : g.vertices) {
    if (!vertex_ids.insert(v.id).second) {
      out.push_back({ViolationCode::DuplicateVertexId, v.id});
    }
  }

  std::set<std::string> edge_ids;
  for (const auto& e : g.edges) {
    if (!edge_ids.insert(e.id).second) {
      out.push_back({ViolationCode::DuplicateEdgeId, e.id});
    }
    if (e.length <= 0) out.push_back({ViolationCode::NonPositiveLength, e.id});
    if (!vertex_ids.count(e.a) || !vertex_ids.count(e.b)) {
      out.push_back({ViolationCode::UnknownEndpoint, e.id});
    }
  }

  std::map<Mark, int> seen;
  Mark n = 0;
  for (const auto& v : g.vertices) {
    for (Mark m : v.marks) {
      if (m <= 0) {
        out.push_back({ViolationCode::NonPositiveMark, v.id, m});
        continue;
      }
      if (++seen[m] == 2) out.push_back({ViolationCode::DuplicateMark, v.id, m});
      n = std::max(n, m);
    }
  }
  for (Mark m = 1; m <= n; ++m) {
    if (!seen.count(m)) out.push_back({ViolationCode::MissingMark, "", m});
  }
  return out;
}

bool is_valid(const MetricGraph& g) { return validate(g).empty(); }

void require_valid(const MetricGraph& g) {
  const auto violations = validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid metric graph:";
  for (const auto& v : violations) msg += " " + v.describe();
  throw DomainError(msg);
}

Mark mark_count(const MetricGraph& g) {
  Mark n = 0;
  for (const auto& v : g.vertices) {
    if (!v.marks.empty()) n = std::max(n, *v.marks.rbegin());
  }
  return n;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<std::string>> components(const MetricGraph& g) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i].id] = i;

  DisjointSets sets(g.vertices.size());
  for (const auto& e : g.edges) sets.unite(index.at(e.a), index.at(e.b));

  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    groups[sets.find(i)].push_back(g.vertices[i].id);
  }
  std::vector<std::vector<std::string>> out;
  for (auto& [root, ids] : groups) {
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const MetricGraph& g) { return components(g).size() <= 1; }

int genus(const MetricGraph& g) {
  require_valid(g);
  return static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) +
         static_cast<int>(components(g).size());
}

std::map<std::string, int> valencies(const MetricGraph& g) {
  std::map<std::string, int> out;
  for (const auto& v : g.vertices) out[v.id] = 0;
  for (const auto& e : g.edges) {
    ++out[e.a];
    ++out[e.b];
  }
  return out;
}

Rational total_length(const MetricGraph& g) {
  if (g.edges.empty()) throw DomainError("total_length: graph has no edges");
  Rational sum = 0;
  for (const auto& e : g.edges) sum += e.length;
  return sum;
}

MetricGraph contract_edge(const MetricGraph& g, const std::string& edge_id) {
  const Edge* target = g.find_edge(edge_id);
  if (target == nullptr) throw DomainError("contract_edge: no edge \"" + edge_id + "\"");
  if (target->is_loop()) {
    throw DomainError("contract_edge: \"" + edge_id + "\" is a loop");
  }
  const std::string keep = std::min(target->a, target->b);
  const std::string drop = std::max(target->a, target->b);

  MetricGraph out;
  MarkSet dropped_marks = g.find_vertex(drop)->marks;
  for (const auto& v : g.vertices) {
    if (v.id == drop) continue;
    Vertex copy = v;
    if (v.id == keep) copy.marks.insert(dropped_marks.begin(), dropped_marks.end());
    out.vertices.push_back(std::move(copy));
  }
  for (const auto& e : g.edges) {
    if (e.id == edge_id) continue;
    Edge copy = e;
    if (copy.a == drop) copy.a = keep;
    if (copy.b == drop) copy.b = keep;
    out.edges.push_back(std::move(copy));
  }
  return out;
}

json graph_to_json(const MetricGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices) {
    vertices.push_back({{"id", v.id}, {"marks", std::vector<Mark>(v.marks.begin(), v.marks.end())}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"id", e.id}, {"ends", {e.a, e.b}}, {"length", format_rational(e.length)}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

namespace {

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(where + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

std::string string_field(const json& j, const char* key, const std::string& where) {
  const json& v = member(j, key, where);
  if (!v.is_string()) throw ParseError(where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

MarkSet marks_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": \"marks\" must be an array");
  MarkSet marks;
  for (const auto& m : j) {
    if (!m.is_number_integer()) throw ParseError(where + ": marks must be integers");
    if (!marks.insert(m.get<Mark>()).second) {
      throw ParseError(where + ": repeated mark " + std::to_string(m.get<Mark>()));
    }
  }
  return marks;
}

MetricGraph graph_from_json(const json& j) {
  MetricGraph g;
  const json& vertices = member(j, "vertices", "graph");
  const json& edges = member(j, "edges", "graph");
  if (!vertices.is_array() || !edges.is_array()) {
    throw ParseError("graph: \"vertices\" and \"edges\" must be arrays");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    g.vertices.push_back({string_field(v, "id", where), marks_from_json(member(v, "marks", where), where)});
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    const json& ends = member(e, "ends", where);
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string()) {
      throw ParseError(where + ": \"ends\" must be two vertex ids");
    }
    Rational length;
    try {
      length = parse_rational(string_field(e, "length", where));
    } catch (const ParseError& err) {
      throw ParseError(where + ": " + err.what());
    }
    g.edges.push_back({string_field(e, "id", where), ends[0].get<std::string>(), ends[1].get<std::string>(),
                       std::move(length)});
  }
  return g;
}

}  // namespace moduli
