#include "moduli/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "moduli/errors.hpp"
#include "moduli/retraction.hpp"
#include "moduli/sampler.hpp"
#include "moduli/scanning.hpp"

namespace moduli {

using nlohmann::json;

namespace {

const Rational& half() {
  static const Rational value = Rational(1, 2);
  return value;
}
const int kDenominators[] = {2, 3, 4, 5, 6, 8, 10, 12, 16, 24, 36, 48, 60, 64, 360, 1024};

template <class T>
T uniform_int(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::uint64_t name_stream(const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

// ---- generators ------------------------------------------------------------

Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
  const int den = kDenominators[uniform_int<std::size_t>(rng, 0, std::size(kDenominators) - 1)];
  const Integer first = floor_of(lo * den) + (Rational(floor_of(lo * den)) == lo * den ? 0 : 1);
  const Integer last = floor_of(hi * den);
  if (last < first) return lo;
  const long long span = static_cast<long long>(last - first);
  return Rational(first + uniform_int<long long>(rng, 0, span), Integer(den));
}

ModuliPoint random_point_with_marks(std::mt19937_64& rng, int max_vertices, int marks) {
  const int vertices = uniform_int(rng, 1, std::max(1, max_vertices));
  int den = kDenominators[uniform_int<std::size_t>(rng, 0, std::size(kDenominators) - 1)];
  while (den < 2 * vertices + 2) den *= 2;

  std::vector<Rational> turns{half()};
  while (static_cast<int>(turns.size()) < vertices) {
    const Rational t(uniform_int(rng, 0, den - 1), den);
    if (std::find(turns.begin(), turns.end(), t) == turns.end()) turns.push_back(t);
  }
  std::vector<CyclePoint> points;
  for (auto& t : turns) points.push_back({t, {}});
  points[0].marks.insert(1);
  for (Mark m = 2; m <= marks; ++m) {
    points[uniform_int<std::size_t>(rng, 0, points.size() - 1)].marks.insert(m);
  }
  return ModuliPoint(MarkedCycle(std::move(points)));
}

ModuliPoint random_point(std::mt19937_64& rng, int max_vertices, int max_marks) {
  return random_point_with_marks(rng, max_vertices, uniform_int(rng, 1, std::max(1, max_marks)));
}

namespace {

Rational random_length(std::mt19937_64& rng) {
  static const int dens[] = {1, 2, 3, 4, 6};
  return Rational(uniform_int(rng, 1, 12), dens[uniform_int<std::size_t>(rng, 0, std::size(dens) - 1)]);
}

void scatter_marks(std::mt19937_64& rng, MetricGraph& g, int marks) {
  for (Mark m = 1; m <= marks; ++m) {
    g.vertices[uniform_int<std::size_t>(rng, 0, g.vertices.size() - 1)].marks.insert(m);
  }
}

MetricGraph random_tree(std::mt19937_64& rng, int vertices) {
  MetricGraph g;
  for (int i = 0; i < vertices; ++i) g.vertices.push_back({"v" + std::to_string(i), {}});
  for (int i = 1; i < vertices; ++i) {
    const int parent = uniform_int(rng, 0, i - 1);
    g.edges.push_back({"e" + std::to_string(i - 1), g.vertices[parent].id, g.vertices[i].id, random_length(rng)});
  }
  return g;
}

void add_random_edge(std::mt19937_64& rng, MetricGraph& g) {
  const auto& a = g.vertices[uniform_int<std::size_t>(rng, 0, g.vertices.size() - 1)].id;
  const auto& b = g.vertices[uniform_int<std::size_t>(rng, 0, g.vertices.size() - 1)].id;
  g.edges.push_back({"e" + std::to_string(g.edges.size()), a, b, random_length(rng)});
}

}  // namespace

MetricGraph random_connected_graph(std::mt19937_64& rng, int max_vertices, int max_edges, int max_marks) {
  const int vertices = uniform_int(rng, 1, std::max(1, std::min(max_vertices, max_edges + 1)));
  MetricGraph g = random_tree(rng, vertices);
  const int extra = uniform_int(rng, 0, std::max(0, max_edges - (vertices - 1)));
  for (int i = 0; i < extra; ++i) add_random_edge(rng, g);
  scatter_marks(rng, g, uniform_int(rng, 0, std::max(0, max_marks)));
  return g;
}

MetricGraph random_genus_one_graph(std::mt19937_64& rng, int max_vertices, int max_marks) {
  MetricGraph g = random_tree(rng, uniform_int(rng, 1, std::max(1, max_vertices)));
  add_random_edge(rng, g);
  scatter_marks(rng, g, uniform_int(rng, 1, std::max(1, max_marks)));
  return g;
}

MetricGraph random_cycle_graph(std::mt19937_64& rng, int max_vertices, int max_marks) {
  const int vertices = uniform_int(rng, 1, std::max(1, max_vertices));
  MetricGraph g;
  for (int i = 0; i < vertices; ++i) g.vertices.push_back({"c" + std::to_string(i), {}});
  for (int i = 0; i < vertices; ++i) {
    g.edges.push_back({"k" + std::to_string(i), g.vertices[i].id, g.vertices[(i + 1) % vertices].id,
                       random_length(rng)});
  }
  scatter_marks(rng, g, uniform_int(rng, 1, std::max(1, max_marks)));
  return g;
}

// ---- shrinking -------------------------------------------------------------

std::vector<ModuliPoint> shrink_candidates(const ModuliPoint& x) {
  std::vector<ModuliPoint> out;
  const auto& pts = x.cycle().points();
  auto attempt = [&](std::vector<CyclePoint> points) {
    try {
      out.emplace_back(MarkedCycle(std::move(points)));
    } catch (const DomainError&) {
    }
  };

  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].marks.empty()) continue;
    auto points = pts;
    points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
    attempt(std::move(points));
  }
  const Mark n = x.cycle().mark_count();
  if (n >= 2) {
    auto points = pts;
    points[x.cycle().find_mark(n)].marks.erase(n);
    attempt(std::move(points));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].turn == half()) continue;
    const Integer den = boost::multiprecision::denominator(pts[i].turn);
    for (int bits = 1; bits <= 8 && (Integer(1) << bits) < den; ++bits) {
      const Rational rounded = fractional_part(dyadic_round(to_double(pts[i].turn), static_cast<unsigned>(bits)));
      auto points = pts;
      points[i].turn = rounded;
      attempt(std::move(points));
    }
  }
  return out;
}

std::vector<MetricGraph> shrink_candidates(const MetricGraph& g) {
  std::vector<MetricGraph> out;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    MetricGraph h = g;
    h.edges.erase(h.edges.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(std::move(h));
  }
  for (const auto& e : g.edges) {
    if (!e.is_loop()) out.push_back(contract_edge(g, e.id));
  }
  const auto val = valencies(g);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (val.at(g.vertices[i].id) != 0 || !g.vertices[i].marks.empty() || g.vertices.size() == 1) continue;
    MetricGraph h = g;
    h.vertices.erase(h.vertices.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(h));
  }
  if (const Mark n = mark_count(g); n >= 1) {
    MetricGraph h = g;
    for (auto& v : h.vertices) v.marks.erase(n);
    out.push_back(std::move(h));
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (g.edges[k].length == 1) continue;
    MetricGraph h = g;
    h.edges[k].length = 1;
    out.push_back(std::move(h));
  }
  return out;
}

// ---- property runner -------------------------------------------------------

std::vector<std::string> HarnessConfig::problems() const {
  std::vector<std::string> out;
  if (cases <= 0) out.push_back("cases must be positive");
  if (!(boundary_band > 0)) out.push_back("boundary_band must be positive");
  if (!(tolerance < boundary_band)) out.push_back("tolerance must be below boundary_band");
  if (tolerance < 0) out.push_back("tolerance must be non-negative");
  if (max_vertices < 1) out.push_back("max_vertices must be at least 1");
  if (max_marks < 1) out.push_back("max_marks must be at least 1");
  return out;
}

Closeness HarnessConfig::closeness(ClosenessMode mode) const { return Closeness{mode, tolerance, fault}; }

bool HarnessReport::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.ok(); });
}

json HarnessReport::to_json() const {
  json props = json::array();
  for (const auto& p : properties) {
    props.push_back({{"name", p.name},
                     {"cases", p.cases},
                     {"passed", p.passed},
                     {"vacuous", p.vacuous},
                     {"failed", p.cases - p.passed - p.vacuous},
                     {"failures", p.failures}});
  }
  return {{"seed", seed}, {"cases", cases}, {"ok", ok()}, {"properties", std::move(props)}};
}

namespace {

enum class Outcome { pass, fail, vacuous };

template <class Case>
struct Property {
  std::string name;
  std::function<Case(std::mt19937_64&)> generate;
  std::function<Outcome(const Case&)> check;
  std::function<std::vector<Case>(const Case&)> shrink;
  std::function<json(const Case&)> describe;
};

template <class Case>
Outcome guarded(const Property<Case>& p, const Case& c, std::string* error) {
  try {
    return p.check(c);
  } catch (const std::exception& e) {
    if (error) *error = e.what();
    return Outcome::fail;
  }
}

constexpr int kMaxRecordedFailures = 5;
constexpr int kMaxShrinkSteps = 200;

template <class Case>
PropertyResult run(const Property<Case>& p, const HarnessConfig& cfg) {
  PropertyResult result;
  result.name = p.name;
  result.cases = cfg.cases;
  const std::uint64_t stream = name_stream(p.name);
  for (int i = 0; i < cfg.cases; ++i) {
    std::mt19937_64 rng(mix_seed(cfg.seed ^ stream, static_cast<std::uint64_t>(i)));
    std::string error;
    std::optional<Case> generated;
    try {
      generated.emplace(p.generate(rng));
    } catch (const std::exception& e) {
      error = std::string("generator: ") + e.what();
    }
    Outcome outcome = generated ? guarded(p, *generated, &error) : Outcome::fail;
    if (outcome == Outcome::pass) {
      ++result.passed;
      continue;
    }
    if (outcome == Outcome::vacuous) {
      ++result.vacuous;
      continue;
    }
    if (static_cast<int>(result.failures.size()) >= kMaxRecordedFailures) continue;
    json entry{{"case", i}, {"error", error}};
    if (generated) {
      Case smallest = *generated;
      int steps = 0;
      for (bool progress = true; progress && steps < kMaxShrinkSteps;) {
        progress = false;
        for (const auto& candidate : p.shrink(smallest)) {
          if (guarded(p, candidate, nullptr) == Outcome::fail) {
            smallest = candidate;
            progress = true;
            ++steps;
            break;
          }
        }
      }
      entry["original"] = p.describe(*generated);
      entry["minimized"] = p.describe(smallest);
      entry["shrink_steps"] = steps;
    }
    result.failures.push_back(std::move(entry));
  }
  return result;
}

Outcome verdict(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

// ---- case types --------------------------------------------------------------

struct PointCase {
  ModuliPoint x;
  std::uint64_t seed = 0;
  double eps1 = 0;
  double eps2 = 0;
  Rational w0 = 0;
  Rational w1 = 0;
};

json describe_point_case(const PointCase& c) {
  return {{"x", cycle_to_json(c.x.cycle())}, {"seed", c.seed},          {"eps1", c.eps1},
          {"eps2", c.eps2},                  {"w0", format_rational(c.w0)}, {"w1", format_rational(c.w1)}};
}

std::vector<PointCase> shrink_point_case(const PointCase& c) {
  std::vector<PointCase> out;
  for (auto& x : shrink_candidates(c.x)) {
    PointCase s = c;
    s.x = std::move(x);
    out.push_back(std::move(s));
  }
  return out;
}

struct GraphCase {
  MetricGraph g;
  Rational tau = 0;
  std::size_t pick = 0;
};

json describe_graph_case(const GraphCase& c) {
  return {{"graph", graph_to_json(c.g)}, {"tau", format_rational(c.tau)}, {"pick", c.pick}};
}

std::vector<GraphCase> shrink_graph_case(const GraphCase& c) {
  std::vector<GraphCase> out;
  for (auto& g : shrink_candidates(c.g)) out.push_back({std::move(g), c.tau, c.pick});
  return out;
}

Property<PointCase> point_property(std::string name, const HarnessConfig& cfg,
                                   std::function<void(std::mt19937_64&, PointCase&)> extra,
                                   std::function<Outcome(const PointCase&)> check) {
  return {std::move(name),
          [cfg, extra](std::mt19937_64& rng) {
            PointCase c{random_point(rng, cfg.max_vertices, cfg.max_marks)};
            c.seed = rng();
            if (extra) extra(rng, c);
            return c;
          },
          std::move(check), shrink_point_case, describe_point_case};
}

Property<GraphCase> graph_property(std::string name, std::function<MetricGraph(std::mt19937_64&)> make,
                                   std::function<Outcome(const GraphCase&)> check) {
  return {std::move(name),
          [make](std::mt19937_64& rng) {
            GraphCase c{make(rng)};
            switch (uniform_int(rng, 0, 3)) {
              case 0: c.tau = 0; break;
              case 1: c.tau = 1; break;
              default: c.tau = random_rational(rng, 0, 1);
            }
            c.pick = uniform_int<std::size_t>(rng, 0, 1000);
            return c;
          },
          std::move(check), shrink_graph_case, describe_graph_case};
}

// Vertex-local signature used to compare retraction results across orders.
std::vector<std::string> local_signature(const MetricGraph& g) {
  std::vector<std::string> out;
  for (const auto& v : g.vertices) {
    std::vector<std::string> incident;
    for (const auto& e : g.edges) {
      if (e.is_loop() && e.a == v.id) incident.push_back("loop:" + format_rational(e.length));
      else if (e.a == v.id || e.b == v.id) incident.push_back(format_rational(e.length));
    }
    std::sort(incident.begin(), incident.end());
    std::string s = "[";
    for (Mark m : v.marks) s += std::to_string(m) + ",";
    s += "]";
    for (const auto& i : incident) s += " " + i;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Cyclic sequence (marks, following edge length) compared up to rotation
// and reversal.
bool cycles_isometric(const MetricGraph& a, const MetricGraph& b) {
  auto sequence = [](const MetricGraph& g) {
    std::vector<std::pair<MarkSet, Rational>> seq;
    if (g.vertices.size() == 1) {
      seq.push_back({g.vertices[0].marks, g.edges.at(0).length});
      return seq;
    }
    std::string at = g.vertices[0].id;
    const Edge* via = nullptr;
    for (const auto& e : g.edges) {
      if (e.a == at || e.b == at) {
        via = &e;
        break;
      }
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      seq.push_back({g.find_vertex(at)->marks, via->length});
      at = via->other(at);
      for (const auto& e : g.edges) {
        if (&e != via && (e.a == at || e.b == at)) {
          via = &e;
          break;
        }
      }
    }
    return seq;
  };
  const auto sa = sequence(a);
  auto sb = sequence(b);
  if (sa.size() != sb.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < sb.size(); ++r) {
      std::rotate(sb.begin(), sb.begin() + 1, sb.end());
      if (sa == sb) return true;
    }
    // reversal: vertex i followed by the edge leading to vertex i-1
    std::vector<std::pair<MarkSet, Rational>> rev;
    for (std::size_t i = 0; i < sb.size(); ++i) {
      const std::size_t j = (sb.size() - i) % sb.size();
      rev.push_back({sb[j].first, sb[(j + sb.size() - 1) % sb.size()].second});
    }
    sb = std::move(rev);
  }
  return false;
}

MarkSet all_marks(const MetricGraph& g) {
  MarkSet out;
  for (const auto& v : g.vertices) out.insert(v.marks.begin(), v.marks.end());
  return out;
}

std::set<Rational> unmarked_turns(const MarkedCycle& c) {
  std::set<Rational> out;
  for (const auto& p : c.points()) {
    if (p.marks.empty()) out.insert(p.turn);
  }
  return out;
}

Rational random_scan_turn(std::mt19937_64& rng) {
  if (uniform_int(rng, 0, 9) == 0) return uniform_int(rng, 0, 1) ? Rational(0) : half();
  return random_rational(rng, 0, half());
}

bool inside(const ModuliPoint& a, const ModuliPoint& b, double eps, const Closeness& rule) {
  return in_neighborhood(a, b, eps, rule).status == Status::inside;
}

}  // namespace

HarnessReport run_properties(const HarnessConfig& cfg) {
  if (const auto problems = cfg.problems(); !problems.empty()) {
    throw DomainError("harness config: " + problems.front());
  }
  const Closeness sym = cfg.closeness(ClosenessMode::symmetric);
  const int max_v = cfg.max_vertices;
  const int max_m = cfg.max_marks;
  const auto connected = [=](std::mt19937_64& rng) { return random_connected_graph(rng, max_v, 12, max_m); };
  const auto genus_one = [=](std::mt19937_64& rng) { return random_genus_one_graph(rng, max_v, max_m); };
  const auto cycle = [=](std::mt19937_64& rng) { return random_cycle_graph(rng, max_v, max_m); };
  const auto random_w_pair = [](std::mt19937_64& rng, PointCase& c) {
    c.w0 = random_scan_turn(rng);
    c.w1 = random_scan_turn(rng);
  };

  HarnessReport report;
  report.seed = cfg.seed;
  report.cases = cfg.cases;
  auto add = [&](const auto& property) { report.properties.push_back(run(property, cfg)); };

  // metric_graph
  add(graph_property("graph.contract_preserves_genus", connected, [](const GraphCase& c) {
    if (!is_valid(c.g) || !is_connected(c.g)) return Outcome::vacuous;
    std::vector<std::string> candidates;
    for (const auto& e : c.g.edges) {
      if (!e.is_loop()) candidates.push_back(e.id);
    }
    if (candidates.empty()) return Outcome::vacuous;
    return verdict(genus(contract_edge(c.g, candidates[c.pick % candidates.size()])) == genus(c.g));
  }));
  add(graph_property("graph.contract_preserves_marks", connected, [](const GraphCase& c) {
    if (!is_valid(c.g)) return Outcome::vacuous;
    for (const auto& e : c.g.edges) {
      if (e.is_loop()) continue;
      const MetricGraph h = contract_edge(c.g, e.id);
      if (!is_valid(h) || all_marks(h) != all_marks(c.g)) return Outcome::fail;
    }
    return Outcome::pass;
  }));
  add(graph_property("graph.json_round_trip", connected, [](const GraphCase& c) {
    return verdict(graph_from_json(json::parse(graph_to_json(c.g).dump())) == c.g);
  }));

  // retraction
  add(graph_property("retraction.shrink_preserves_genus", connected, [](const GraphCase& c) {
    if (!is_valid(c.g)) return Outcome::vacuous;
    return verdict(genus(shrink_bridges(c.g, c.tau)) == genus(c.g));
  }));
  add(graph_property("retraction.shrink_to_one_is_bridge_free", connected, [](const GraphCase& c) {
    if (!is_valid(c.g)) return Outcome::vacuous;
    return verdict(find_bridges(shrink_bridges(c.g, 1)).empty());
  }));
  add(graph_property("retraction.non_bridge_lengths_unchanged", connected, [](const GraphCase& c) {
    if (!is_valid(c.g)) return Outcome::vacuous;
    const auto bridges = find_bridges(c.g);
    const MetricGraph h = shrink_bridges(c.g, c.tau);
    for (const auto& e : c.g.edges) {
      if (bridges.count(e.id)) continue;
      const Edge* after = h.find_edge(e.id);
      if (after == nullptr || after->length != e.length) return Outcome::fail;
    }
    return Outcome::pass;
  }));
  add(graph_property("retraction.retract_of_shrunk_genus_one_is_stable", genus_one, [](const GraphCase& c) {
    if (!is_valid(c.g) || !is_connected(c.g) || genus(c.g) != 1 || mark_count(c.g) < 1) {
      return Outcome::vacuous;
    }
    return verdict(is_tropically_stable(conjectured_retract(shrink_bridges(c.g, 1))));
  }));
  add(graph_property("retraction.retract_idempotent", connected, [](const GraphCase& c) {
    if (!is_valid(c.g) || !is_connected(c.g)) return Outcome::vacuous;
    const MetricGraph once = conjectured_retract(c.g);
    return verdict(conjectured_retract(once) == once);
  }));
  add(graph_property("retraction.retract_order_independent", connected, [](const GraphCase& c) {
    if (!is_valid(c.g) || !is_connected(c.g)) return Outcome::vacuous;
    return verdict(local_signature(conjectured_retract(c.g, RetractOrder::ascending_ids)) ==
                   local_signature(conjectured_retract(c.g, RetractOrder::descending_ids)));
  }));

  // moduli_space
  add(point_property("moduli.reflect_involution", cfg, nullptr,
                     [](const PointCase& c) { return verdict(reflect(reflect(c.x.cycle())) == c.x.cycle()); }));
  add(point_property("moduli.canonical_idempotent_and_reflection_invariant", cfg, nullptr, [](const PointCase& c) {
    const MarkedCycle& x = c.x.cycle();
    return verdict(canonical_form(x) == c.x && canonical_form(reflect(x)) == c.x &&
                   iso_equal(x, reflect(x)));
  }));
  add(point_property(
      "moduli.neighborhood_reflexive", cfg, [](std::mt19937_64& rng, PointCase& c) { c.eps1 = uniform_real(rng, 1e-6, 2.5); },
      [sym](const PointCase& c) { return verdict(inside(c.x, c.x, c.eps1, sym)); }));
  add(point_property(
      "moduli.neighborhood_monotone", cfg,
      [](std::mt19937_64& rng, PointCase& c) {
        c.eps1 = uniform_real(rng, 0.01, 2.2);
        c.eps2 = c.eps1 + uniform_real(rng, 0.0, 1.0);
      },
      [sym, max_v](const PointCase& c) {
        std::mt19937_64 rng(c.seed);
        const ModuliPoint y = uniform_int(rng, 0, 1)
                                  ? sample_neighbor(c.x, uniform_real(rng, 0.02, 0.8), rng(), sym)
                                  : random_point_with_marks(rng, max_v, c.x.cycle().mark_count());
        const Status small = in_neighborhood(c.x, y, c.eps1, sym).status;
        const Status large = in_neighborhood(c.x, y, c.eps2, sym).status;
        if (small != Status::inside || large == Status::boundary) return Outcome::vacuous;
        return verdict(large == Status::inside);
      }));
  add(point_property(
      "moduli.symmetric_mode_symmetry", cfg, [](std::mt19937_64& rng, PointCase& c) { c.eps1 = uniform_real(rng, 0.02, 2.2); },
      [sym, max_v](const PointCase& c) {
        std::mt19937_64 rng(c.seed);
        const ModuliPoint y = uniform_int(rng, 0, 1)
                                  ? sample_neighbor(c.x, uniform_real(rng, 0.02, 0.8), rng(), sym)
                                  : random_point_with_marks(rng, max_v, c.x.cycle().mark_count());
        const Status forward = in_neighborhood(c.x, y, c.eps1, sym).status;
        const Status backward = in_neighborhood(y, c.x, c.eps1, sym).status;
        if (forward == Status::boundary || backward == Status::boundary) return Outcome::vacuous;
        return verdict(forward == backward);
      }));
  add(point_property(
      "moduli.additivity_forward", cfg,
      [](std::mt19937_64& rng, PointCase& c) {
        c.eps1 = uniform_real(rng, 0.01, 0.25);
        c.eps2 = uniform_real(rng, 0.01, 0.25);
      },
      [sym](const PointCase& c) {
        const ModuliPoint y = sample_neighbor(c.x, c.eps2, c.seed, sym);
        const ModuliPoint z = sample_neighbor(y, c.eps1, mix_seed(c.seed, 1), sym);
        return verdict(additivity_witness_check(c.x, y, z, c.eps1, c.eps2, sym));
      }));
  add(point_property(
      "moduli.additivity_reverse_midpoint", cfg,
      [](std::mt19937_64& rng, PointCase& c) {
        c.eps1 = uniform_real(rng, 0.01, 0.25);
        c.eps2 = uniform_real(rng, 0.01, 0.25);
      },
      [sym](const PointCase& c) {
        std::mt19937_64 rng(c.seed);
        const double alpha = (c.eps1 + c.eps2) * uniform_real(rng, 0.5, 0.999);
        const Deformation d = sample_deformation(c.x, alpha, rng());
        const ModuliPoint y = apply_deformation(d, 1.0);
        const ModuliPoint mid = apply_deformation(d, c.eps2 / (c.eps1 + c.eps2));
        if (!inside(c.x, y, c.eps1 + c.eps2, sym)) return Outcome::fail;
        return verdict(inside(c.x, mid, c.eps2, sym) && inside(mid, y, c.eps1, sym));
      }));
  add(graph_property("moduli.normalize_round_trip", cycle, [](const GraphCase& c) {
    if (!is_valid(c.g) || mark_count(c.g) < 1 || !is_connected(c.g) || genus(c.g) != 1) return Outcome::vacuous;
    for (const auto& [id, k] : valencies(c.g)) {
      if (k != 2) return Outcome::vacuous;
    }
    const NormalizedCycle n = normalize(c.g);
    const MetricGraph back = denormalize(n.point, n.total);
    const NormalizedCycle again = normalize(back);
    return verdict(cycles_isometric(back, c.g) && again.point == n.point && again.total == n.total);
  }));

  // scanning
  add(point_property("scanning.identity_end", cfg, nullptr,
                     [](const PointCase& c) { return verdict(scan(c.x, ScanParameter(half())) == c.x); }));
  add(point_property("scanning.retraction_end", cfg, nullptr, [](const PointCase& c) {
    const ModuliPoint y = scan(c.x, ScanParameter(0));
    return verdict(is_in_Y(y) && scan(y, ScanParameter(0)) == y);
  }));
  add(point_property("scanning.marked_points_fixed", cfg, random_w_pair, [](const PointCase& c) {
    const MarkedCycle after = scan_cycle(c.x.cycle(), ScanParameter(c.w0));
    for (const auto& p : c.x.cycle().points()) {
      if (p.marks.empty()) continue;
      const auto it = std::find_if(after.points().begin(), after.points().end(),
                                   [&](const CyclePoint& q) { return q.turn == p.turn; });
      if (it == after.points().end() || it->marks != p.marks) return Outcome::fail;
    }
    return Outcome::pass;
  }));
  add(point_property("scanning.representative_independent", cfg, random_w_pair, [](const PointCase& c) {
    const ScanParameter w(c.w0);
    return verdict(canonical_form(scan_cycle(reflect(c.x.cycle()), w)) == scan(c.x, w));
  }));
  add(point_property("scanning.monotone_forgetting", cfg, random_w_pair, [](const PointCase& c) {
    const Rational& lo = std::min(c.w0, c.w1);
    const Rational& hi = std::max(c.w0, c.w1);
    auto early = unmarked_turns(scan_cycle(c.x.cycle(), ScanParameter(lo)));
    const auto late = unmarked_turns(scan_cycle(c.x.cycle(), ScanParameter(hi)));
    for (const Rational& t : {lo, Rational(fractional_part(1 - lo)), hi, Rational(fractional_part(1 - hi))}) {
      early.erase(t);
    }
    return verdict(std::includes(late.begin(), late.end(), early.begin(), early.end()));
  }));
  add(point_property("scanning.step1", cfg, random_w_pair, [sym, band = cfg.boundary_band](const PointCase& c) {
    const ScanParameter w0(c.w0), w1(c.w1);
    const double gap = std::abs(w1.abscissa() - w0.abscissa());
    if (!(gap * 0.1 > band)) return Outcome::vacuous;
    return verdict(lemma_step1_check(c.x, w0, w1, gap * 1.1, sym));
  }));
  add(point_property(
      "scanning.step2", cfg,
      [](std::mt19937_64& rng, PointCase& c) {
        c.eps1 = uniform_real(rng, 0.01, 0.5);
        c.w0 = random_scan_turn(rng);
      },
      [sym](const PointCase& c) {
        const ModuliPoint y = sample_neighbor(c.x, c.eps1, c.seed, sym);
        return verdict(lemma_step2_check(c.x, y, ScanParameter(c.w0), c.eps1 * (1 + 1e-6), sym));
      }));
  add(point_property(
      "scanning.continuity", cfg,
      [](std::mt19937_64& rng, PointCase& c) {
        c.eps1 = uniform_real(rng, 0.05, 0.3);
        c.eps2 = c.eps1 * uniform_real(rng, 0.2, 0.45);
        c.w0 = random_scan_turn(rng);
      },
      [sym](const PointCase& c) {
        const auto r = continuity_certificate(c.x, ScanParameter(c.w0), c.eps2, c.eps1, 20, c.seed, sym);
        return verdict(r.passed == r.samples);
      }));

  return report;
}

}  // namespace moduli
