#include "moduli/retraction.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "moduli/errors.hpp"

namespace moduli {

std::set<std::string> find_bridges(const MetricGraph& g) {
  const std::size_t n = g.vertices.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[g.vertices[i].id] = i;

  // adjacency by edge index so parallel edges stay distinguishable
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    if (e.is_loop()) continue;
    const std::size_t a = index.at(e.a), b = index.at(e.b);
    adj[a].push_back({b, k});
    adj[b].push_back({a, k});
  }

  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> discovery(n, unvisited), low(n, 0);
  std::set<std::string> bridges;
  std::size_t tick = 0;

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t via_edge) {
    discovery[u] = low[u] = tick++;
    for (const auto& [v, k] : adj[u]) {
      if (k == via_edge) continue;
      if (discovery[v] == unvisited) {
        dfs(v, k);
        low[u] = std::min(low[u], low[v]);
        if (low[v] > discovery[u]) bridges.insert(g.edges[k].id);
      } else {
        low[u] = std::min(low[u], discovery[v]);
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (discovery[i] == unvisited) dfs(i, unvisited);
  }
  return bridges;
}

MetricGraph shrink_bridges(const MetricGraph& g, const Rational& tau) {
  if (tau < 0 || tau > 1) {
    throw DomainError("shrink_bridges: tau " + format_rational(tau) + " outside [0,1]");
  }
  require_valid(g);
  const auto bridges = find_bridges(g);
  if (tau < 1) {
    MetricGraph out = g;
    for (auto& e : out.edges) {
      if (bridges.count(e.id)) e.length *= (1 - tau);
    }
    return out;
  }
  // Contracting one bridge leaves every other bridge a bridge.
  MetricGraph out = g;
  for (const auto& id : bridges) out = contract_edge(out, id);
  return out;
}

bool is_tropically_stable(const MetricGraph& g) {
  const auto val = valencies(g);
  return std::all_of(g.vertices.begin(), g.vertices.end(), [&](const Vertex& v) {
    return val.at(v.id) + static_cast<int>(v.marks.size()) >= 3;
  });
}

namespace {

std::vector<const Vertex*> in_order(const MetricGraph& g, RetractOrder order) {
  std::vector<const Vertex*> out;
  for (const auto& v : g.vertices) out.push_back(&v);
  std::sort(out.begin(), out.end(), [&](const Vertex* x, const Vertex* y) {
    return order == RetractOrder::ascending_ids ? x->id < y->id : x->id > y->id;
  });
  return out;
}

// One leaf contraction, if any applies.
bool contract_one_leaf(MetricGraph& g, RetractOrder order) {
  const auto val = valencies(g);
  for (const Vertex* v : in_order(g, order)) {
    if (val.at(v->id) != 1 || v->marks.size() > 1) continue;
    for (const auto& e : g.edges) {
      if (e.a == v->id || e.b == v->id) {
        g = contract_edge(g, e.id);
        return true;
      }
    }
  }
  return false;
}

// One unmarked valency-2 vertex dissolved into a single edge, if any applies.
bool dissolve_one(MetricGraph& g, RetractOrder order) {
  const auto val = valencies(g);
  for (const Vertex* v : in_order(g, order)) {
    if (val.at(v->id) != 2 || !v->marks.empty()) continue;
    std::vector<std::size_t> incident;
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      if (g.edges[k].a == v->id || g.edges[k].b == v->id) incident.push_back(k);
    }
    if (incident.size() != 2) continue;  // a lone loop: keep the vertex
    const Edge& e1 = g.edges[incident[0]];
    const Edge& e2 = g.edges[incident[1]];
    Edge merged{std::min(e1.id, e2.id), e1.other(v->id), e2.other(v->id), e1.length + e2.length};
    const std::string gone = v->id;

    MetricGraph out;
    for (const auto& w : g.vertices) {
      if (w.id != gone) out.vertices.push_back(w);
    }
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      if (k == incident[0]) {
        out.edges.push_back(merged);
      } else if (k != incident[1]) {
        out.edges.push_back(g.edges[k]);
      }
    }
    g = std::move(out);
    return true;
  }
  return false;
}

}  // namespace

MetricGraph conjectured_retract(const MetricGraph& g, RetractOrder order) {
  require_valid(g);
  MetricGraph out = g;
  bool changed = true;
  while (changed) {
    changed = false;
    while (contract_one_leaf(out, order)) changed = true;
    while (dissolve_one(out, order)) changed = true;
  }
  return out;
}

}  // namespace moduli
