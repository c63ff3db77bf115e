#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "moduli/marked_cycle.hpp"
#include "moduli/metric_graph.hpp"
#include "moduli/neighborhood.hpp"

namespace moduli {

// ---- generators ------------------------------------------------------------

// A point of X_n with at most `max_vertices` vertices and 1..max_marks marks.
ModuliPoint random_point(std::mt19937_64& rng, int max_vertices, int max_marks);
// Same vertex layout constraints, with exactly `marks` marks.
ModuliPoint random_point_with_marks(std::mt19937_64& rng, int max_vertices, int marks);

// Connected multigraph (loops and parallel edges allowed) with 0..max_marks marks.
MetricGraph random_connected_graph(std::mt19937_64& rng, int max_vertices, int max_edges, int max_marks);
// Connected, genus 1, at least one mark.
MetricGraph random_genus_one_graph(std::mt19937_64& rng, int max_vertices, int max_marks);
// A single cycle (or one vertex with a loop), at least one mark.
MetricGraph random_cycle_graph(std::mt19937_64& rng, int max_vertices, int max_marks);

// Uniform over multiples of 1/den in [lo, hi] for a random small den.
Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi);

// ---- shrinking -------------------------------------------------------------

// Candidates that are "smaller": fewer vertices, fewer marks, or turns with
// smaller denominators.
std::vector<ModuliPoint> shrink_candidates(const ModuliPoint& x);
// Fewer edges, fewer vertices, fewer marks, unit lengths.
std::vector<MetricGraph> shrink_candidates(const MetricGraph& g);

// ---- property runner -------------------------------------------------------

struct HarnessConfig {
  std::uint64_t seed = 1;
  int cases = 100;
  double tolerance = 1e-12;
  double boundary_band = 1e-9;
  int max_vertices = 8;
  int max_marks = 5;
  Fault fault = Fault::none;

  // Empty when the configuration is usable.
  std::vector<std::string> problems() const;
  Closeness closeness(ClosenessMode mode = ClosenessMode::symmetric) const;
};

struct PropertyResult {
  std::string name;
  int cases = 0;
  int passed = 0;
  int vacuous = 0;  // cases whose premise did not hold
  std::vector<nlohmann::json> failures;

  bool ok() const { return passed + vacuous == cases; }
};

struct HarnessReport {
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<PropertyResult> properties;

  bool ok() const;
  nlohmann::json to_json() const;
};

// Every invariant of the graph, retraction, moduli-space and scanning
// modules, each over cfg.cases seeded cases. Failing cases are shrunk.
HarnessReport run_properties(const HarnessConfig& cfg);

}  // namespace moduli
