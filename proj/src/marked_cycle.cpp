#include "moduli/marked_cycle.hpp"

#include <algorithm>
#include <map>

#include "moduli/errors.hpp"

namespace moduli {

using nlohmann::json;

namespace {

const Rational& half() {
  static const Rational value = Rational(1, 2);
  return value;
}

}  // namespace

MarkedCycle::MarkedCycle(std::vector<CyclePoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(),
            [](const CyclePoint& a, const CyclePoint& b) { return a.turn < b.turn; });
  std::map<Mark, int> seen;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.turn < 0 || p.turn >= 1) {
      throw DomainError("marked cycle: turn " + format_rational(p.turn) + " outside [0,1)");
    }
    if (i > 0 && points_[i - 1].turn == p.turn) {
      throw DomainError("marked cycle: repeated turn " + format_rational(p.turn));
    }
    for (Mark m : p.marks) {
      if (m <= 0) throw DomainError("marked cycle: non-positive mark " + std::to_string(m));
      if (++seen[m] > 1) throw DomainError("marked cycle: mark " + std::to_string(m) + " appears twice");
      n_ = std::max(n_, m);
    }
  }
  for (Mark m = 1; m <= n_; ++m) {
    if (!seen.count(m)) throw DomainError("marked cycle: mark " + std::to_string(m) + " missing");
  }
  if (n_ < 1) throw DomainError("marked cycle: mark 1 missing");
  if (points_[find_mark(1)].turn != half()) {
    throw DomainError("marked cycle: mark 1 must sit at turn 1/2");
  }
}

std::size_t MarkedCycle::find_mark(Mark mark) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].marks.count(mark)) return i;
  }
  return points_.size();
}

bool encoding_less(const MarkedCycle& a, const MarkedCycle& b) {
  const auto& pa = a.points();
  const auto& pb = b.points();
  const std::size_t common = std::min(pa.size(), pb.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (pa[i].turn != pb[i].turn) return pa[i].turn < pb[i].turn;
    if (pa[i].marks != pb[i].marks) {
      return std::lexicographical_compare(pa[i].marks.begin(), pa[i].marks.end(), pb[i].marks.begin(),
                                          pb[i].marks.end());
    }
  }
  return pa.size() < pb.size();
}

MarkedCycle reflect(const MarkedCycle& c) {
  std::vector<CyclePoint> out;
  out.reserve(c.size());
  for (const auto& p : c.points()) out.push_back({fractional_part(1 - p.turn), p.marks});
  return MarkedCycle(std::move(out));
}

ModuliPoint::ModuliPoint(const MarkedCycle& c) : cycle_(c) {
  MarkedCycle mirrored = reflect(c);
  if (encoding_less(mirrored, cycle_)) cycle_ = std::move(mirrored);
}

ModuliPoint canonical_form(const MarkedCycle& c) { return ModuliPoint(c); }

bool iso_equal(const MarkedCycle& a, const MarkedCycle& b) { return canonical_form(a) == canonical_form(b); }

NormalizedCycle normalize(const MetricGraph& g) {
  require_valid(g);
  if (g.edges.empty() || !is_connected(g) || genus(g) != 1) {
    throw DomainError("normalize: graph is not a connected genus-1 graph");
  }
  const auto val = valencies(g);
  for (const auto& [id, k] : val) {
    if (k != 2) throw DomainError("normalize: vertex \"" + id + "\" has valency " + std::to_string(k));
  }
  if (mark_count(g) < 1) throw DomainError("normalize: graph carries no marks");

  const Rational total = total_length(g);
  const Vertex* start = nullptr;
  for (const auto& v : g.vertices) {
    if (v.marks.count(1)) start = &v;
  }

  // Walk once around the cycle, leaving the start along its smaller edge id.
  std::vector<CyclePoint> points{{half(), start->marks}};
  const Edge* via = nullptr;
  for (const auto& e : g.edges) {
    if ((e.a == start->id || e.b == start->id) && (via == nullptr || e.id < via->id)) via = &e;
  }
  Rational travelled = 0;
  std::string at = start->id;
  while (true) {
    travelled += via->length;
    at = via->other(at);
    if (at == start->id) break;
    points.push_back({fractional_part(half() + travelled / total), g.find_vertex(at)->marks});
    for (const auto& e : g.edges) {
      if (&e != via && (e.a == at || e.b == at)) {
        via = &e;
        break;
      }
    }
  }
  return {ModuliPoint(MarkedCycle(std::move(points))), total};
}

MetricGraph denormalize(const ModuliPoint& p, const Rational& total) {
  if (total <= 0) throw DomainError("denormalize: total length must be positive");
  const auto& pts = p.cycle().points();
  MetricGraph g;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    g.vertices.push_back({"v" + std::to_string(i), pts[i].marks});
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::size_t j = (i + 1) % pts.size();
    Rational gap = fractional_part(pts[j].turn - pts[i].turn);
    if (gap == 0) gap = 1;  // single vertex: the loop is the whole cycle
    g.edges.push_back({"e" + std::to_string(i), g.vertices[i].id, g.vertices[j].id, gap * total});
  }
  return g;
}

bool is_in_Y(const ModuliPoint& p) {
  const auto& pts = p.cycle().points();
  const bool has_origin = !pts.empty() && pts.front().turn == 0;
  return has_origin && std::all_of(pts.begin(), pts.end(), [](const CyclePoint& q) {
           return q.turn == 0 || !q.marks.empty();
         });
}

bool is_tropical_point(const ModuliPoint& p) {
  const auto& pts = p.cycle().points();
  return std::all_of(pts.begin(), pts.end(), [](const CyclePoint& q) { return !q.marks.empty(); });
}

ModuliPoint to_tropical_point(const ModuliPoint& p) {
  if (!is_in_Y(p)) throw DomainError("to_tropical_point: point is not in Y_n");
  const auto& pts = p.cycle().points();
  if (!pts.front().marks.empty() || pts.size() == 1) return p;
  return ModuliPoint(MarkedCycle(std::vector<CyclePoint>(pts.begin() + 1, pts.end())));
}

json cycle_to_json(const MarkedCycle& c) {
  json points = json::array();
  for (const auto& p : c.points()) {
    points.push_back({{"turn", format_rational(p.turn)}, {"marks", std::vector<Mark>(p.marks.begin(), p.marks.end())}});
  }
  return {{"points", std::move(points)}};
}

MarkedCycle cycle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array()) {
    throw ParseError("marked cycle: missing array field \"points\"");
  }
  std::vector<CyclePoint> points;
  const json& arr = j.at("points");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    const json& p = arr[i];
    if (!p.is_object() || !p.contains("turn") || !p.at("turn").is_string()) {
      throw ParseError(where + ": \"turn\" must be a rational string");
    }
    if (!p.contains("marks")) throw ParseError(where + ": missing field \"marks\"");
    Rational turn;
    try {
      turn = parse_rational(p.at("turn").get<std::string>());
    } catch (const ParseError& err) {
      throw ParseError(where + ": " + err.what());
    }
    points.push_back({std::move(turn), marks_from_json(p.at("marks"), where)});
  }
  return MarkedCycle(std::move(points));
}

std::string to_string(const MarkedCycle& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& p = c.points()[i];
    if (i) out += ", ";
    out += format_rational(p.turn) + ":{";
    bool first = true;
    for (Mark m : p.marks) {
      if (!first) out += ",";
      out += std::to_string(m);
      first = false;
    }
    out += "}";
  }
  return out + "}";
}

}  // namespace moduli
