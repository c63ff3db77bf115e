#include "moduli/sampler.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "moduli/errors.hpp"

namespace moduli {
namespace {

const Rational& sampler_step() {
  static const Rational value = Rational(Integer(1), Integer(1) << kSamplerBits);
  return value;
}
constexpr long long kMaxSteps = 1LL << (kSamplerBits - 2);  // a quarter turn

// Largest k with arc_variation(from, sign * k * step) < bound.
long long reach_steps(const Rational& from, int sign, double bound) {
  long long lo = 0, hi = kMaxSteps;
  if (arc_variation(from, Rational(sign * hi) * sampler_step()) < bound) return hi;
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (arc_variation(from, Rational(sign * mid) * sampler_step()) < bound) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// Signed displacement of least magnitude taking `from` to `to`.
Rational shortest_delta(const Rational& from, const Rational& to) {
  Rational d = fractional_part(to - from);
  if (d > Rational(1, 2)) d -= 1;
  return d;
}

bool chance(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Deformation sample_deformation(const ModuliPoint& x, double alpha, std::uint64_t seed) {
  if (!(alpha > 0)) throw DomainError("sample_deformation: alpha must be positive");
  std::mt19937_64 rng(mix_seed(seed, 0x5a4d));
  const double bound = kSamplerReach * alpha;

  Deformation d;
  for (const auto& p : x.cycle().points()) {
    DeformationMove move{p.turn, {}};
    const bool anchor = p.marks.count(1) > 0;

    std::vector<Mark> loose;
    for (Mark m : p.marks) {
      if (m != 1) loose.push_back(m);
    }
    std::shuffle(loose.begin(), loose.end(), rng);

    // Partition the marks into groups; the anchor group keeps mark 1.
    std::vector<MarkSet> groups;
    const std::size_t splittable = loose.size() + (anchor ? 1 : 0);
    if (splittable >= 2 && chance(rng, 0.4)) {
      const std::size_t parts = std::uniform_int_distribution<std::size_t>(2, splittable)(rng);
      groups.resize(parts);
      std::size_t next = 0;
      if (anchor) groups[next++].insert(1);
      for (; next < parts; ++next) groups[next].insert(loose[next - (anchor ? 1 : 0)]);
      for (std::size_t i = parts - (anchor ? 1 : 0); i < loose.size(); ++i) {
        groups[std::uniform_int_distribution<std::size_t>(0, parts - 1)(rng)].insert(loose[i]);
      }
    } else {
      groups.push_back(p.marks);
    }
    if (chance(rng, 0.15)) groups.emplace_back();  // sprout an unmarked vertex

    for (auto& marks : groups) {
      Rational delta = 0;
      if (!marks.count(1) && !chance(rng, 0.2)) {
        const int sign = chance(rng, 0.5) ? 1 : -1;
        const long long reach = reach_steps(p.turn, sign, bound);
        const long long k = std::uniform_int_distribution<long long>(0, reach)(rng);
        delta = Rational(sign * k) * sampler_step();
      }
      move.pieces.push_back({std::move(delta), std::move(marks)});
    }
    d.moves.push_back(std::move(move));
  }

  // Occasionally snap a piece onto another vertex's final position so the
  // two merge. Targets are pieces that were not snapped themselves.
  std::vector<std::pair<std::size_t, std::size_t>> fixed;
  for (std::size_t i = 0; i < d.moves.size(); ++i) {
    for (std::size_t j = 0; j < d.moves[i].pieces.size(); ++j) fixed.push_back({i, j});
  }
  std::vector<bool> snapped_move(d.moves.size(), false);
  for (std::size_t i = 0; i < d.moves.size(); ++i) {
    auto& move = d.moves[i];
    for (auto& piece : move.pieces) {
      if (piece.marks.count(1) || !chance(rng, 0.25)) continue;
      std::vector<Rational> candidates;
      for (const auto& [mi, pj] : fixed) {
        if (mi == i || snapped_move[mi]) continue;
        const auto& other = d.moves[mi];
        const Rational target = fractional_part(other.source + other.pieces[pj].delta);
        const Rational delta = shortest_delta(move.source, target);
        if (arc_variation(move.source, delta) < bound) candidates.push_back(delta);
      }
      if (candidates.empty()) continue;
      piece.delta = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      snapped_move[i] = true;
    }
  }
  return d;
}

ModuliPoint apply_deformation(const Deformation& d, double fraction) {
  std::map<Rational, MarkSet> placed;
  for (const auto& move : d.moves) {
    for (const auto& piece : move.pieces) {
      Rational travelled = fraction > 0 ? piece.delta : Rational(0);
      if (fraction > 0 && fraction < 1.0 && piece.delta != 0) {
        const double target = fraction * arc_variation(move.source, piece.delta);
        long long lo = 0, hi = 1LL << kSamplerBits;
        while (hi - lo > 1) {
          const long long mid = lo + (hi - lo) / 2;
          if (arc_variation(move.source, piece.delta * Rational(mid) * sampler_step()) <= target) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        travelled = piece.delta * Rational(lo) * sampler_step();
      }
      auto& marks = placed[fractional_part(move.source + travelled)];
      marks.insert(piece.marks.begin(), piece.marks.end());
    }
  }
  std::vector<CyclePoint> points;
  for (auto& [turn, marks] : placed) points.push_back({turn, std::move(marks)});
  return ModuliPoint(MarkedCycle(std::move(points)));
}

ModuliPoint sample_neighbor(const ModuliPoint& x, double alpha, std::uint64_t seed, const Closeness& rule) {
  ModuliPoint y = apply_deformation(sample_deformation(x, alpha, seed), 1.0);
  const auto verdict = in_neighborhood(x, y, alpha, rule);
  if (verdict.status != Status::inside) {
    throw GeneratorError("sample_neighbor: " + to_string(y.cycle()) + " is " + to_string(verdict.status) +
                         " of N_" + std::to_string(alpha) + "(" + to_string(x.cycle()) + ")");
  }
  return y;
}

}  // namespace moduli
