#include "moduli/neighborhood.hpp"

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

using testing::point;
using testing::R;

const Closeness kPaper{ClosenessMode::paper};
const Closeness kSymmetric{ClosenessMode::symmetric};

TEST(XCoord, Examples) {
  EXPECT_EQ(x_coord(R("0")), 1.0);
  EXPECT_EQ(x_coord(R("1/2")), -1.0);
  EXPECT_EQ(x_coord(R("1/4")), 0.0);
  EXPECT_EQ(x_coord(R("3/4")), 0.0);
  EXPECT_NEAR(x_coord(R("1/6")), 0.5, 1e-15);
  EXPECT_NEAR(x_coord(R("1/12")), std::sqrt(3.0) / 2, 1e-15);
}

TEST(XCoord, MirrorTurnsAgreeBitwise) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Rational u = random_rational(rng, 0, 1);
    EXPECT_EQ(x_coord(u), x_coord(1 - u));
    EXPECT_NEAR(x_coord(u), std::cos(2 * std::numbers::pi * to_double(u)), 1e-14);
  }
}

TEST(EpsClose, Examples) {
  EXPECT_EQ(eps_close(R("1/3"), R("1/3"), 1e-9), Status::inside);
  EXPECT_EQ(eps_close(R("0"), R("1/12"), 0.2, kPaper), Status::inside);
  EXPECT_EQ(eps_close(R("0"), R("1/12"), 0.2, kSymmetric), Status::inside);
  EXPECT_EQ(eps_close(R("0"), R("1/12"), 0.1, kSymmetric), Status::outside);
}

TEST(EpsClose, LiteralStripIsAsymmetric) {
  EXPECT_EQ(eps_close(R("1/12"), R("5/6"), 0.4, kPaper), Status::inside);
  EXPECT_EQ(eps_close(R("5/6"), R("1/12"), 0.4, kPaper), Status::outside);
  EXPECT_EQ(eps_close(R("1/12"), R("5/6"), 0.4, kSymmetric), Status::outside);
  EXPECT_EQ(eps_close(R("5/6"), R("1/12"), 0.4, kSymmetric), Status::outside);
}

TEST(EpsClose, BoundaryWithinTolerance) {
  // arc 0 -> 1/6 spans x in [0.5, 1]; the strip around 1 needs eps > 0.5
  EXPECT_EQ(eps_close(R("0"), R("1/6"), 0.5, kPaper), Status::boundary);
  EXPECT_EQ(eps_close(R("0"), R("1/6"), 0.5 + 1e-9, kPaper), Status::inside);
  EXPECT_EQ(eps_close(R("0"), R("1/6"), 0.5 - 1e-9, kPaper), Status::outside);
}

TEST(EpsClose, AntipodalUsesEitherArc) {
  // 1/8 and 5/8: either half circle reaches one of x = -1, x = 1
  const double x = std::cos(std::numbers::pi / 4);
  EXPECT_EQ(eps_close(R("1/8"), R("5/8"), 1 + x - 0.01), Status::outside);
  EXPECT_EQ(eps_close(R("1/8"), R("5/8"), 1 + x + 0.01), Status::inside);
  // both arcs of 0 and 1/2 span [-1, 1]
  EXPECT_EQ(eps_close(R("0"), R("1/2"), 1.9), Status::outside);
  EXPECT_EQ(eps_close(R("0"), R("1/2"), 2.01), Status::inside);
}

TEST(ShortestArcRange, MatchesDenseSampling) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const Rational ra = random_rational(rng, 0, 1);
    const Rational rb = random_rational(rng, 0, 1);
    const double a = to_double(ra);
    const double b = to_double(rb);
    double d = b - a;
    d -= std::floor(d);
    if (std::abs(d - 0.5) < 1e-9 || d == 0) continue;
    const double from = d < 0.5 ? a : b;
    const double len = d < 0.5 ? d : 1 - d;
    double lo = 2, hi = -2;
    const int steps = 20000;
    for (int k = 0; k <= steps; ++k) {
      const double x = std::cos(2 * std::numbers::pi * (from + len * k / steps));
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    const ArcRange r = shortest_arc_range(ra, rb);
    EXPECT_NEAR(r.min, lo, 1e-6) << a << " " << b;
    EXPECT_NEAR(r.max, hi, 1e-6) << a << " " << b;
  }
}

TEST(ArcVariation, Examples) {
  EXPECT_NEAR(arc_variation(R("0"), R("1/2")), 2.0, 1e-15);
  EXPECT_NEAR(arc_variation(R("0"), R("1")), 4.0, 1e-15);
  EXPECT_NEAR(arc_variation(R("1/12"), R("-1/6")), 2 * (1 - std::sqrt(3.0) / 2), 1e-15);
  EXPECT_EQ(arc_variation(R("1/3"), R("0")), 0.0);
}

TEST(InNeighborhood, Examples) {
  const auto x = point({{"1/2", {1}}});
  EXPECT_EQ(in_neighborhood(x, x, 1e-6).status, Status::inside);
  const auto y = point({{"1/2", {1}}, {"0", {}}});
  EXPECT_EQ(in_neighborhood(x, y, 1).status, Status::outside);
  EXPECT_EQ(in_neighborhood(x, y, 1.99).status, Status::outside);
  EXPECT_EQ(in_neighborhood(x, y, 2.01).status, Status::inside);

  const auto joined = point({{"1/2", {1}}, {"0", {2, 3}}});
  const auto split = point({{"1/2", {1}}, {"1/24", {2}}, {"23/24", {3}}});
  const auto v = in_neighborhood(joined, split, 0.1);
  EXPECT_EQ(v.status, Status::inside);
  EXPECT_NE(v.witness, Witness::none);
  EXPECT_EQ(in_neighborhood(joined, split, 0.03).status, Status::outside);  // 1 - cos 15deg ~ 0.0341
}

TEST(InNeighborhood, SmallMoveOfTwoMarks) {
  const auto x = point({{"1/2", {1}}, {"1/4", {2}}, {"3/4", {3}}});
  const auto y = ModuliPoint(testing::cycle({{"1/2", {1}}, {"13/48", {2}}, {"35/48", {3}}}));
  const auto v = in_neighborhood(x, y, 0.2);
  EXPECT_EQ(v.status, Status::inside);
}

TEST(InNeighborhood, MarkCountMismatchIsOutside) {
  EXPECT_EQ(in_neighborhood(point({{"1/2", {1}}}), point({{"1/2", {1}}, {"0", {2}}}), 10).status, Status::outside);
}

TEST(InNeighborhood, RejectsNonPositiveEps) {
  const auto x = point({{"1/2", {1}}});
  EXPECT_THROW(in_neighborhood(x, x, 0), DomainError);
  EXPECT_THROW(in_neighborhood(x, x, -1), DomainError);
}

TEST(InNeighborhood, MonotoneAndSymmetricOnRandomPairs) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const ModuliPoint x = random_point(rng, 6, 4);
    const ModuliPoint y = random_point_with_marks(rng, 6, x.cycle().mark_count());
    const double eps = std::uniform_real_distribution<double>(0.05, 2.5)(rng);
    const auto v = in_neighborhood(x, y, eps);
    const auto w = in_neighborhood(y, x, eps);
    if (v.status == Status::boundary || w.status == Status::boundary) continue;
    ++checked;
    EXPECT_EQ(v.status, w.status);
    if (v.status == Status::inside) EXPECT_EQ(in_neighborhood(x, y, eps * 1.5).status, Status::inside);
  }
  EXPECT_GT(checked, 250);
}

TEST(Additivity, Examples) {
  const auto x = point({{"1/2", {1}}, {"1/8", {2}}});
  EXPECT_TRUE(additivity_witness_check(x, x, x, 0.1, 0.2));
  // premise fails: y far from x
  const auto y = point({{"1/2", {1}}, {"3/8", {2}}});
  EXPECT_EQ(in_neighborhood(x, y, 0.05).status, Status::outside);
  EXPECT_TRUE(additivity_witness_check(x, y, x, 0.05, 0.05));
  EXPECT_THROW(additivity_witness_check(x, x, x, 0, 1), DomainError);
}

TEST(Additivity, SampledTriples) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const ModuliPoint x = random_point(rng, 6, 4);
    const double e2 = std::uniform_real_distribution<double>(0.02, 0.5)(rng);
    const double e1 = std::uniform_real_distribution<double>(0.02, 0.5)(rng);
    const ModuliPoint y = sample_neighbor(x, e2, rng());
    const ModuliPoint z = sample_neighbor(y, e1, rng());
    EXPECT_TRUE(additivity_witness_check(x, y, z, e1, e2));
  }
}

TEST(ClosenessMode, Parse) {
  EXPECT_EQ(parse_closeness_mode("paper"), ClosenessMode::paper);
  EXPECT_EQ(parse_closeness_mode("symmetric"), ClosenessMode::symmetric);
  EXPECT_THROW(parse_closeness_mode("loose"), ParseError);
}

}  // namespace
}  // namespace moduli
