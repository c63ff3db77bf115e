#include "moduli/scanning.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "moduli/errors.hpp"
#include "moduli/harness.hpp"
#include "moduli/sampler.hpp"
#include "test_support.hpp"

namespace moduli {
namespace {

using testing::cycle;
using testing::point;
using testing::R;

const ModuliPoint kExample = point({{"1/2", {1}}, {"1/4", {}}, {"7/8", {2}}});

// Region test in the plane: an unmarked vertex survives iff its abscissa
// is right of the line.
std::optional<std::map<Rational, MarkSet>> region_scan(const MarkedCycle& c, const Rational& w) {
  const double s = std::cos(2 * std::numbers::pi * to_double(w));
  std::map<Rational, MarkSet> out;
  for (const auto& p : c.points()) {
    const double x = std::cos(2 * std::numbers::pi * to_double(p.turn));
    if (p.turn != w && p.turn != 1 - w && std::abs(x - s) < 1e-12) return std::nullopt;
    if (!p.marks.empty() || x > s) out[p.turn] = p.marks;
  }
  out.try_emplace(w);
  out.try_emplace(w == 0 ? Rational(0) : Rational(1 - w));
  return out;
}

TEST(Scan, ExampleAtOneSixth) {
  const auto raw = scan_cycle(cycle({{"1/2", {1}}, {"1/4", {}}, {"7/8", {2}}}), ScanParameter(R("1/6")));
  EXPECT_EQ(raw, cycle({{"1/6", {}}, {"1/2", {1}}, {"5/6", {}}, {"7/8", {2}}}));
  EXPECT_TRUE(iso_equal(scan(kExample, ScanParameter(R("1/6"))).cycle(), raw));
}

TEST(Scan, ExampleAtZero) {
  const auto y = scan(kExample, ScanParameter(0));
  EXPECT_EQ(y, point({{"0", {}}, {"1/2", {1}}, {"7/8", {2}}}));
  EXPECT_TRUE(is_in_Y(y));
}

TEST(Scan, IdentityAtHalf) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const ModuliPoint x = random_point(rng, 8, 5);
    EXPECT_EQ(scan(x, ScanParameter(R("1/2"))), x);
  }
}

TEST(Scan, MatchesRegionOracle) {
  std::mt19937_64 rng(32);
  int compared = 0;
  for (int i = 0; i < 400; ++i) {
    const ModuliPoint x = random_point(rng, 8, 5);
    const Rational w = random_rational(rng, 0, Rational(1, 2));
    const auto expected = region_scan(x.cycle(), w);
    if (!expected) continue;
    ++compared;
    const MarkedCycle got = scan_cycle(x.cycle(), ScanParameter(w));
    std::map<Rational, MarkSet> actual;
    for (const auto& p : got.points()) actual[p.turn] = p.marks;
    EXPECT_EQ(actual, *expected);
  }
  EXPECT_GT(compared, 350);
}

TEST(Scan, RepresentativeIndependent) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    const ModuliPoint x = random_point(rng, 8, 5);
    const ScanParameter w(random_rational(rng, 0, Rational(1, 2)));
    EXPECT_EQ(ModuliPoint(scan_cycle(reflect(x.cycle()), w)), scan(x, w));
  }
}

TEST(ScanParameter, Range) {
  EXPECT_THROW(ScanParameter(R("-1/8")), DomainError);
  EXPECT_THROW(ScanParameter(R("5/8")), DomainError);
  EXPECT_EQ(ScanParameter(R("1/2")).abscissa(), -1.0);
  EXPECT_EQ(ScanParameter(R("0")).abscissa(), 1.0);
  EXPECT_EQ(scan_at_time(0).w(), R("1/2"));
  EXPECT_EQ(scan_at_time(1).w(), 0);
  EXPECT_THROW(scan_at_time(R("3/2")), DomainError);
}

TEST(HomotopyFrame, Endpoints) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 100; ++i) {
    const ModuliPoint x = random_point(rng, 8, 5);
    EXPECT_EQ(homotopy_frame(x, 0), x);
    const ModuliPoint end = homotopy_frame(x, 1);
    EXPECT_TRUE(is_in_Y(end));
    EXPECT_EQ(homotopy_frame(end, 1), end);
  }
}

TEST(Step1, Examples) {
  EXPECT_TRUE(lemma_step1_check(kExample, ScanParameter(R("1/6")), ScanParameter(R("1/6")), 1e-6));
  const ScanParameter w0(R("1/6")), w1(R("1/8"));
  EXPECT_NEAR(std::abs(w1.abscissa() - w0.abscissa()), std::sqrt(0.5) - 0.5, 1e-15);
  EXPECT_TRUE(lemma_step1_check(kExample, w0, w1, 0.3));
  EXPECT_THROW(lemma_step1_check(kExample, w0, w1, 0.2), DomainError);
}

TEST(Step2, Examples) {
  const ScanParameter w(R("1/6"));
  EXPECT_TRUE(lemma_step2_check(kExample, kExample, w, 0.1));
  const ModuliPoint far = point({{"1/2", {1}}, {"1/8", {2}}});
  EXPECT_THROW(lemma_step2_check(kExample, far, w, 0.1), DomainError);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ModuliPoint y = sample_neighbor(kExample, 0.2, seed);
    EXPECT_TRUE(lemma_step2_check(kExample, y, w, 0.2 * (1 + 1e-6)));
  }
}

TEST(Certificate, SmallRun) {
  const CertificateReport r = continuity_certificate(kExample, ScanParameter(R("1/6")), 0.04, 0.1, 200, 5);
  EXPECT_EQ(r.samples, 200);
  EXPECT_EQ(r.passed, 200);
  EXPECT_TRUE(r.failures.empty());
  const auto j = certificate_to_json(r);
  EXPECT_EQ(j["samples"], 200);
  EXPECT_EQ(j["passed"], 200);
  EXPECT_TRUE(j["failures"].empty());
}

TEST(Certificate, Deterministic) {
  const auto a = continuity_certificate(kExample, ScanParameter(R("1/5")), 0.03, 0.1, 50, 9);
  const auto b = continuity_certificate(kExample, ScanParameter(R("1/5")), 0.03, 0.1, 50, 9);
  EXPECT_EQ(certificate_to_json(a), certificate_to_json(b));
}

TEST(Certificate, RequiresSmallAlpha) {
  EXPECT_THROW(continuity_certificate(kExample, ScanParameter(R("1/6")), 0.05, 0.1, 10, 1), DomainError);
  EXPECT_THROW(continuity_certificate(kExample, ScanParameter(R("1/6")), 0, 0.1, 10, 1), DomainError);
}

TEST(NonStrong, Witness) {
  const auto [y, w] = non_strongness_witness();
  EXPECT_TRUE(is_in_Y(y));
  EXPECT_FALSE(iso_equal(scan(y, w).cycle(), y.cycle()));
  EXPECT_EQ(scan(y, w), point({{"0", {}}, {"1/4", {}}, {"1/2", {1}}, {"3/4", {}}}));
  EXPECT_EQ(scan(y, ScanParameter(R("1/2"))), y);
}

}  // namespace
}  // namespace moduli
