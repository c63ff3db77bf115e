#include "moduli/scanning.hpp"

#include <cmath>
#include <map>
#include <random>

#include "moduli/errors.hpp"
#include "moduli/sampler.hpp"

namespace moduli {
namespace {

const Rational& half() {
  static const Rational value = Rational(1, 2);
  return value;
}
constexpr int kRedraws = 64;

}  // namespace

ScanParameter::ScanParameter(Rational w) : w_(std::move(w)) {
  if (w_ < 0 || w_ > half()) throw DomainError("scan parameter " + format_rational(w_) + " outside [0,1/2]");
}

ScanParameter scan_at_time(const Rational& tau) {
  if (tau < 0 || tau > 1) throw DomainError("homotopy time " + format_rational(tau) + " outside [0,1]");
  return ScanParameter((1 - tau) / 2);
}

MarkedCycle scan_cycle(const MarkedCycle& c, const ScanParameter& scan) {
  const Rational& w = scan.w();
  const Rational mirror = fractional_part(1 - w);
  std::map<Rational, MarkSet> kept;
  for (const auto& p : c.points()) {
    if (!p.marks.empty() || p.turn < w || p.turn > 1 - w) kept[p.turn] = p.marks;
  }
  kept.try_emplace(w);
  kept.try_emplace(mirror);
  std::vector<CyclePoint> points;
  for (auto& [turn, marks] : kept) points.push_back({turn, std::move(marks)});
  return MarkedCycle(std::move(points));
}

ModuliPoint scan(const ModuliPoint& x, const ScanParameter& w) { return ModuliPoint(scan_cycle(x.cycle(), w)); }

ModuliPoint homotopy_frame(const ModuliPoint& x, const Rational& tau) { return scan(x, scan_at_time(tau)); }

bool lemma_step1_check(const ModuliPoint& x, const ScanParameter& w0, const ScanParameter& w1, double eps,
                       const Closeness& rule) {
  if (!(eps > std::abs(w1.abscissa() - w0.abscissa()))) {
    throw DomainError("lemma_step1_check: eps must exceed the distance between the scan lines");
  }
  const ModuliPoint a = scan(x, w0);
  const ModuliPoint b = scan(x, w1);
  return in_neighborhood(a, b, eps, rule).status == Status::inside &&
         in_neighborhood(b, a, eps, rule).status == Status::inside;
}

bool lemma_step2_check(const ModuliPoint& x, const ModuliPoint& y, const ScanParameter& w, double eps,
                       const Closeness& rule) {
  if (in_neighborhood(x, y, eps, rule).status != Status::inside) {
    throw DomainError("lemma_step2_check: y is not inside N_eps(x)");
  }
  return in_neighborhood(scan(x, w), scan(y, w), eps, rule).status == Status::inside;
}

namespace {

// A scan position whose line is within kSamplerReach * alpha of the line
// at w. The step is the largest dyadic turn that keeps the whole arc
// within reach, so the draw never needs rejection.
Rational nearby_scan_turn(const Rational& w, double alpha, std::mt19937_64& rng) {
  const double bound = kSamplerReach * alpha;
  Rational step(1, 4);
  for (int i = 0; i < 200; ++i) {
    if (arc_variation(w, step) < bound && arc_variation(w, -step) < bound) break;
    step /= 2;
  }
  const long long k = std::uniform_int_distribution<long long>(-1024, 1024)(rng);
  Rational turn = w + step * Rational(k, 1024);
  if (turn < 0) turn = -turn;
  if (turn > half()) turn = 1 - turn;
  return turn;
}

}  // namespace

CertificateReport continuity_certificate(const ModuliPoint& x, const ScanParameter& w, double alpha, double eps,
                                         int samples, std::uint64_t seed, const Closeness& rule) {
  if (!(alpha > 0) || !(alpha < eps / 2)) {
    throw DomainError("continuity_certificate: requires 0 < alpha < eps/2");
  }
  if (samples < 0) throw DomainError("continuity_certificate: negative sample count");

  const ModuliPoint centre = scan(x, w);
  CertificateReport report;
  report.samples = samples;
  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    bool settled = false;
    for (int attempt = 0; attempt < kRedraws && !settled; ++attempt) {
      const ModuliPoint y = sample_neighbor(x, alpha, rng(), rule);
      const ScanParameter moved(nearby_scan_turn(w.w(), alpha, rng));
      const Status s = in_neighborhood(centre, scan(y, moved), eps, rule).status;
      if (s == Status::boundary) {
        ++report.regenerated;
        if (attempt + 1 == kRedraws) report.failures.push_back({y, moved.w(), s});
        continue;
      }
      settled = true;
      if (s == Status::inside) {
        ++report.passed;
      } else {
        report.failures.push_back({y, moved.w(), s});
      }
    }
  }
  return report;
}

NonStrongWitness non_strongness_witness() {
  ModuliPoint y(MarkedCycle({{Rational(0), {}}, {half(), {1}}}));
  return {y, ScanParameter(Rational(1, 4))};
}

nlohmann::json certificate_to_json(const CertificateReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back(
        {{"y", cycle_to_json(f.y.cycle())}, {"w_prime", format_rational(f.w_prime)}, {"status", to_string(f.status)}});
  }
  return {{"samples", report.samples}, {"passed", report.passed}, {"regenerated", report.regenerated},
          {"failures", std::move(failures)}};
}

}  // namespace moduli
