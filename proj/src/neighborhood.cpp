#include "moduli/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moduli/errors.hpp"

namespace moduli {
namespace {

const Rational& half() {
  static const Rational value = Rational(1, 2);
  return value;
}
const Rational& quarter() {
  static const Rational value = Rational(1, 4);
  return value;
}
const Rational& eighth() {
  static const Rational value = Rational(1, 8);
  return value;
}
const Rational& three_eighths() {
  static const Rational value = Rational(3, 8);
  return value;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Status all_of(Status a, Status b) {
  if (a == Status::outside || b == Status::outside) return Status::outside;
  if (a == Status::boundary || b == Status::boundary) return Status::boundary;
  return Status::inside;
}

Status any_of(Status a, Status b) {
  if (a == Status::inside || b == Status::inside) return Status::inside;
  if (a == Status::boundary || b == Status::boundary) return Status::boundary;
  return Status::outside;
}

Status strictly_positive(double margin, double tolerance) {
  if (margin > tolerance) return Status::inside;
  if (margin < -tolerance) return Status::outside;
  return Status::boundary;
}

// Does the counterclockwise arc from `from` of length `length` pass `q`?
bool ccw_arc_contains(const Rational& from, const Rational& length, const Rational& q) {
  return fractional_part(q - from) <= length;
}

ArcRange ccw_arc_range(const Rational& from, const Rational& length, double x_from, double x_to) {
  ArcRange r{std::min(x_from, x_to), std::max(x_from, x_to)};
  if (ccw_arc_contains(from, length, Rational(0))) r.max = 1.0;
  if (ccw_arc_contains(from, length, half())) r.min = -1.0;
  return r;
}

Status strip_verdict(const ArcRange& r, double centre, double eps, const Closeness& rule) {
  double upper = centre + eps - r.max;
  if (rule.fault == Fault::flip_upper_bound) upper = -upper;
  const double lower = r.min - (centre - eps);
  return all_of(strictly_positive(upper, rule.tolerance), strictly_positive(lower, rule.tolerance));
}

Status arc_verdict(const ArcRange& r, double xa, double xb, double eps, const Closeness& rule) {
  Status s = strip_verdict(r, xa, eps, rule);
  if (rule.mode == ClosenessMode::symmetric) s = all_of(s, strip_verdict(r, xb, eps, rule));
  return s;
}

Status close(const Rational& a, double xa, const Rational& b, double xb, double eps, const Closeness& rule) {
  if (a == b) return Status::inside;
  const Rational d = fractional_part(b - a);
  if (d < half()) return arc_verdict(ccw_arc_range(a, d, xa, xb), xa, xb, eps, rule);
  if (d > half()) return arc_verdict(ccw_arc_range(b, 1 - d, xb, xa), xa, xb, eps, rule);
  return any_of(arc_verdict(ccw_arc_range(a, d, xa, xb), xa, xb, eps, rule),
                arc_verdict(ccw_arc_range(b, d, xb, xa), xa, xb, eps, rule));
}

struct Located {
  const CyclePoint* point;
  double x;
};

std::vector<Located> locate(const MarkedCycle& c) {
  std::vector<Located> out;
  out.reserve(c.size());
  for (const auto& p : c.points()) out.push_back({&p, x_coord(p.turn)});
  return out;
}

Status close(const Located& a, const Located& b, double eps, const Closeness& rule) {
  return close(a.point->turn, a.x, b.point->turn, b.x, eps, rule);
}

// Every point of `from` is eps-close to some point of `to`.
Status covered(const std::vector<Located>& from, const std::vector<Located>& to, double eps,
               const Closeness& rule) {
  Status all = Status::inside;
  for (const auto& p : from) {
    Status some = Status::outside;
    for (const auto& q : to) {
      some = any_of(some, close(p, q, eps, rule));
      if (some == Status::inside) break;
    }
    all = all_of(all, some);
    if (all == Status::outside) break;
  }
  return all;
}

Status definition_holds(const MarkedCycle& g, const MarkedCycle& h, double eps, const Closeness& rule) {
  if (g.mark_count() != h.mark_count()) return Status::outside;
  const auto gl = locate(g);
  const auto hl = locate(h);
  Status s = Status::inside;
  for (Mark k = 1; k <= g.mark_count() && s != Status::outside; ++k) {
    s = all_of(s, close(gl[g.find_mark(k)], hl[h.find_mark(k)], eps, rule));
  }
  if (s != Status::outside) s = all_of(s, covered(hl, gl, eps, rule));
  if (s != Status::outside) s = all_of(s, covered(gl, hl, eps, rule));
  return s;
}

}  // namespace

double x_coord(const Rational& turn) {
  const Rational r = fractional_part(turn);
  const Rational folded = r > half() ? Rational(1 - r) : r;
  if (folded <= eighth()) return std::cos(kTwoPi * to_double(folded));
  if (folded <= three_eighths()) return std::sin(kTwoPi * to_double(quarter() - folded));
  return -std::cos(kTwoPi * to_double(half() - folded));
}

const char* to_string(Status s) {
  switch (s) {
    case Status::inside: return "inside";
    case Status::outside: return "outside";
    case Status::boundary: return "boundary";
  }
  return "?";
}

const char* to_string(ClosenessMode m) { return m == ClosenessMode::paper ? "paper" : "symmetric"; }

ClosenessMode parse_closeness_mode(const std::string& text) {
  if (text == "paper") return ClosenessMode::paper;
  if (text == "symmetric") return ClosenessMode::symmetric;
  throw ParseError("unknown closeness mode \"" + text + "\"");
}

const char* to_string(Witness w) {
  switch (w) {
    case Witness::none: return "none";
    case Witness::plain: return "plain";
    case Witness::reflected: return "reflected";
  }
  return "?";
}

Status eps_close(const Rational& a, const Rational& b, double eps, const Closeness& rule) {
  const Rational ua = fractional_part(a);
  const Rational ub = fractional_part(b);
  return close(ua, x_coord(ua), ub, x_coord(ub), eps, rule);
}

ArcRange shortest_arc_range(const Rational& a, const Rational& b) {
  const Rational ua = fractional_part(a);
  const Rational ub = fractional_part(b);
  const Rational d = fractional_part(ub - ua);
  if (d <= half()) return ccw_arc_range(ua, d, x_coord(ua), x_coord(ub));
  return ccw_arc_range(ub, 1 - d, x_coord(ub), x_coord(ua));
}

double arc_variation(const Rational& a, const Rational& delta) {
  const Rational lo = delta < 0 ? Rational(a + delta) : a;
  const Rational hi = delta < 0 ? a : Rational(a + delta);
  // extremes of x sit at the half-integer turns strictly inside (lo, hi)
  std::vector<Rational> stops{lo};
  for (Integer k = floor_of(2 * lo) + 1; Rational(k, 2) < hi; ++k) stops.push_back(Rational(k, 2));
  stops.push_back(hi);
  double total = 0.0;
  for (std::size_t i = 1; i < stops.size(); ++i) {
    total += std::abs(x_coord(stops[i]) - x_coord(stops[i - 1]));
  }
  return total;
}

NeighborhoodVerdict in_neighborhood(const ModuliPoint& x, const ModuliPoint& y, double eps,
                                    const Closeness& rule) {
  if (!(eps > 0)) throw DomainError("in_neighborhood: eps must be positive");
  const Status plain = definition_holds(x.cycle(), y.cycle(), eps, rule);
  if (plain == Status::inside) return {Status::inside, Witness::plain};
  const Status mirrored = definition_holds(x.cycle(), reflect(y.cycle()), eps, rule);
  if (mirrored == Status::inside) return {Status::inside, Witness::reflected};
  return {any_of(plain, mirrored), Witness::none};
}

bool additivity_witness_check(const ModuliPoint& x, const ModuliPoint& y, const ModuliPoint& z, double eps1,
                              double eps2, const Closeness& rule) {
  if (!(eps1 > 0) || !(eps2 > 0)) throw DomainError("additivity_witness_check: eps must be positive");
  if (in_neighborhood(x, y, eps2, rule).status != Status::inside) return true;
  if (in_neighborhood(y, z, eps1, rule).status != Status::inside) return true;
  return in_neighborhood(x, z, eps1 + eps2, rule).status == Status::inside;
}

}  // namespace moduli
