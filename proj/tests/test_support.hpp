#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "moduli/marked_cycle.hpp"
#include "moduli/metric_graph.hpp"

namespace moduli::testing {

inline Rational R(const char* text) { return parse_rational(text); }

struct P {
  const char* turn;
  MarkSet marks;
};

inline MarkedCycle cycle(std::initializer_list<P> points) {
  std::vector<CyclePoint> out;
  for (const auto& p : points) out.push_back({R(p.turn), p.marks});
  return MarkedCycle(std::move(out));
}

inline ModuliPoint point(std::initializer_list<P> points) { return ModuliPoint(cycle(points)); }

struct GraphBuilder {
  MetricGraph g;

  GraphBuilder& vertex(std::string id, MarkSet marks = {}) {
    g.vertices.push_back({std::move(id), std::move(marks)});
    return *this;
  }
  GraphBuilder& edge(std::string id, std::string a, std::string b, const char* length) {
    g.edges.push_back({std::move(id), std::move(a), std::move(b), R(length)});
    return *this;
  }
  MetricGraph build() const { return g; }
};

}  // namespace moduli::testing

namespace moduli {

// readable gtest failure messages
inline void PrintTo(const MarkedCycle& c, std::ostream* os) { *os << to_string(c); }
inline void PrintTo(const ModuliPoint& x, std::ostream* os) { *os << to_string(x.cycle()); }

}  // namespace moduli
