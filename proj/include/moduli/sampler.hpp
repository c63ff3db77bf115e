#pragma once

#include <cstdint>
#include <vector>

#include "moduli/marked_cycle.hpp"
#include "moduli/neighborhood.hpp"

namespace moduli {

// Random deformations of a point of X_n of the kind allowed inside an
// epsilon-neighborhood: vertices slide along the circle, multi-mark
// vertices split, and vertices that land on the same turn merge.

// Displacements are multiples of 2^-kSamplerBits turns.
inline constexpr unsigned kSamplerBits = 20;
// Each piece's arc has x-variation below this fraction of alpha.
inline constexpr double kSamplerReach = 0.9;

struct DeformationPiece {
  Rational delta;  // signed turn displacement
  MarkSet marks;
};

struct DeformationMove {
  Rational source;
  std::vector<DeformationPiece> pieces;
};

struct Deformation {
  std::vector<DeformationMove> moves;
};

Deformation sample_deformation(const ModuliPoint& x, double alpha, std::uint64_t seed);

// Moves every piece along its arc until it has covered `fraction` of the
// arc's x-variation; fraction 1 is the full deformation, 0 the source.
ModuliPoint apply_deformation(const Deformation& d, double fraction);

// Deterministic in (x, alpha, seed). Throws GeneratorError if the result
// is not inside N_alpha(x) under `rule`.
ModuliPoint sample_neighbor(const ModuliPoint& x, double alpha, std::uint64_t seed, const Closeness& rule = {});

// splitmix64 finalizer; used to derive independent per-case seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace moduli
