#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "moduli/metric_graph.hpp"
#include "moduli/rational.hpp"

namespace moduli {

// Positions on the unit circle are "turns": the fraction of a full
// counterclockwise revolution starting from (1,0). Turn 1/2 is (-1,0),
// where the vertex carrying mark 1 always sits.

struct CyclePoint {
  Rational turn;
  MarkSet marks;

  friend bool operator==(const CyclePoint&, const CyclePoint&) = default;
};

// A marked cycle of length 1. Points are kept sorted by turn; construction
// validates every invariant and throws DomainError otherwise.
class MarkedCycle {
 public:
  explicit MarkedCycle(std::vector<CyclePoint> points);

  const std::vector<CyclePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Mark mark_count() const { return n_; }
  // Index of the point carrying `mark`, or size() if absent.
  std::size_t find_mark(Mark mark) const;

  friend bool operator==(const MarkedCycle&, const MarkedCycle&) = default;

 private:
  std::vector<CyclePoint> points_;
  Mark n_ = 0;
};

// Entrywise comparison of the turn-ascending (turn, marks) encodings.
bool encoding_less(const MarkedCycle& a, const MarkedCycle& b);

MarkedCycle reflect(const MarkedCycle& c);

// The canonical representative of an isometry class.
class ModuliPoint {
 public:
  explicit ModuliPoint(const MarkedCycle& c);

  const MarkedCycle& cycle() const { return cycle_; }

  friend bool operator==(const ModuliPoint&, const ModuliPoint&) = default;

 private:
  MarkedCycle cycle_;
};

ModuliPoint canonical_form(const MarkedCycle& c);
bool iso_equal(const MarkedCycle& a, const MarkedCycle& b);

struct NormalizedCycle {
  ModuliPoint point;
  Rational total;
};

// Bridge-free genus-1 cycle with n >= 1 marks -> (point of X_n, length).
NormalizedCycle normalize(const MetricGraph& g);
MetricGraph denormalize(const ModuliPoint& p, const Rational& total);

bool is_in_Y(const ModuliPoint& p);
bool is_tropical_point(const ModuliPoint& p);
// Forgets an unmarked vertex at turn 0. Requires is_in_Y(p).
ModuliPoint to_tropical_point(const ModuliPoint& p);

nlohmann::json cycle_to_json(const MarkedCycle& c);
MarkedCycle cycle_from_json(const nlohmann::json& j);

// Human-readable "{1/4:{2}, 1/2:{1}}".
std::string to_string(const MarkedCycle& c);

}  // namespace moduli
