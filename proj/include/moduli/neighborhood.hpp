#pragma once

#include "moduli/marked_cycle.hpp"
#include "moduli/rational.hpp"

namespace moduli {

// cos(2*pi*u). Exact at multiples of 1/4 and bitwise equal for u and 1-u.
double x_coord(const Rational& turn);

enum class Status { inside, outside, boundary };
const char* to_string(Status s);

// Strip centering for epsilon-closeness. `paper` centers the strip at the
// first point only; `symmetric` requires the strip around both points.
enum class ClosenessMode { paper, symmetric };
const char* to_string(ClosenessMode m);
ClosenessMode parse_closeness_mode(const std::string& text);

// Mutation hooks used by the harness self-test.
enum class Fault { none, flip_upper_bound };

struct Closeness {
  ClosenessMode mode = ClosenessMode::symmetric;
  // Strict inequalities decided within this margin report Status::boundary.
  double tolerance = 1e-12;
  Fault fault = Fault::none;
};

// Whether the shorter circle arc from a to b stays inside the vertical strip
// of half-width eps. When both arcs are half circles either may be used.
Status eps_close(const Rational& a, const Rational& b, double eps, const Closeness& rule = {});

// Minimum and maximum x over the shorter arc (the counterclockwise one when
// the two points are antipodal).
struct ArcRange {
  double min;
  double max;
};
ArcRange shortest_arc_range(const Rational& a, const Rational& b);

// Total variation of x along the signed arc a -> a + delta.
double arc_variation(const Rational& a, const Rational& delta);

enum class Witness { none, plain, reflected };
const char* to_string(Witness w);

struct NeighborhoodVerdict {
  Status status = Status::outside;
  Witness witness = Witness::none;
};

// Is y in the open eps-neighborhood of x? The representative of x is fixed;
// y is tried as given and reflected.
NeighborhoodVerdict in_neighborhood(const ModuliPoint& x, const ModuliPoint& y, double eps,
                                    const Closeness& rule = {});

// (y in N_eps2(x) and z in N_eps1(y)) implies z in N_{eps1+eps2}(x).
// Boundary verdicts in the premises make the implication vacuous.
bool additivity_witness_check(const ModuliPoint& x, const ModuliPoint& y, const ModuliPoint& z, double eps1,
                              double eps2, const Closeness& rule = {});

}  // namespace moduli
