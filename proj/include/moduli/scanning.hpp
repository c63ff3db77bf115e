#pragma once

#include <cstdint>
#include <vector>

#include "moduli/marked_cycle.hpp"
#include "moduli/neighborhood.hpp"

namespace moduli {

// Position of the scanning line, given by the turn w in [0, 1/2] of its
// upper intersection with the circle. The line is x = cos(2*pi*w); w = 1/2
// is the leftmost position (-1,0), w = 0 the rightmost (1,0).
class ScanParameter {
 public:
  explicit ScanParameter(Rational w);

  const Rational& w() const { return w_; }
  double abscissa() const { return x_coord(w_); }

 private:
  Rational w_;
};

// tau in [0,1]: tau = 0 is the identity end, tau = 1 lands in Y_n.
ScanParameter scan_at_time(const Rational& tau);

// The sweep applied to one representative: keeps every marked point, adds
// vertices at w and 1-w, and drops unmarked points strictly left of the
// line (turns strictly between w and 1-w).
MarkedCycle scan_cycle(const MarkedCycle& c, const ScanParameter& w);

ModuliPoint scan(const ModuliPoint& x, const ScanParameter& w);
ModuliPoint homotopy_frame(const ModuliPoint& x, const Rational& tau);

// Both scans at w0 and w1 lie in each other's eps-neighborhood.
// Requires eps > |cos(2 pi w1) - cos(2 pi w0)|.
bool lemma_step1_check(const ModuliPoint& x, const ScanParameter& w0, const ScanParameter& w1, double eps,
                       const Closeness& rule = {});

// scan(y, w) lies in N_eps(scan(x, w)). Requires y in N_eps(x).
bool lemma_step2_check(const ModuliPoint& x, const ModuliPoint& y, const ScanParameter& w, double eps,
                       const Closeness& rule = {});

struct CertificateSample {
  ModuliPoint y;
  Rational w_prime;
  Status status;
};

struct CertificateReport {
  int samples = 0;
  int passed = 0;
  int regenerated = 0;
  std::vector<CertificateSample> failures;
};

// Draws (y, w') with y from sample_neighbor(x, alpha) and the scan line
// within alpha of the line at w, and counts how often scan(y, w') lands in
// N_eps(scan(x, w)). Requires 0 < alpha < eps / 2. Boundary verdicts are
// redrawn; a sample that stays on the boundary after repeated draws is
// reported as a failure.
CertificateReport continuity_certificate(const ModuliPoint& x, const ScanParameter& w, double alpha, double eps,
                                         int samples, std::uint64_t seed, const Closeness& rule = {});

// A point of Y_n together with a scan position that moves it.
struct NonStrongWitness {
  ModuliPoint y;
  ScanParameter w;
};
NonStrongWitness non_strongness_witness();

nlohmann::json certificate_to_json(const CertificateReport& report);

}  // namespace moduli
