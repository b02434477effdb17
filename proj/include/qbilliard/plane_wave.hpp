#pragma once

#include <cstdint>
#include <vector>

#include "qbilliard/billiard.hpp"

namespace qbilliard {

/// Physical frequency of one lattice step along x and y. Isosceles waves are
/// e^{i(a x + b y)}; equilateral waves are e^{i(a 2x/3 + b 2y/sqrt3)}, which
/// keeps every wavevector and every ladder shift on an integer lattice.
struct LatticeBasis {
  double unit_x = 1.0;
  double unit_y = 1.0;
};

LatticeBasis lattice_basis(BilliardKind kind);

enum class Reduction { kHalfReal, kHalfImag };

/// sign * e^{i(a ux x + b uy y)}. (shift_a, shift_b) is the wavevector
/// increment one power of the ladder operator applies to this term.
struct PlaneWaveTerm {
  int sign = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t shift_a = 0;
  std::int64_t shift_b = 0;

  friend bool operator==(const PlaneWaveTerm&, const PlaneWaveTerm&) = default;
};

/// Half the real (or imaginary) part of a signed sum of plane waves: the
/// trace of a diagonal matrix of exponentials. Terms keep the diagonal slot
/// order, with both exponentials of the first slot listed first.
struct PlaneWaveSum {
  BilliardKind kind = BilliardKind::kRightIsosceles;
  SymmetryFamily family = SymmetryFamily::kDefault;
  Reduction reduction = Reduction::kHalfReal;
  std::vector<PlaneWaveTerm> terms;

  LatticeBasis basis() const { return lattice_basis(kind); }

  friend bool operator==(const PlaneWaveSum&, const PlaneWaveSum&) = default;
};

PlaneWaveSum plane_wave_rep(const EigenfunctionSpec& spec);

/// Applies the p-th power of the ladder operator: every (a, b) moves by
/// p * (shift_a, shift_b). Negative p lowers. Exact integer arithmetic.
PlaneWaveSum ladder_shift(const PlaneWaveSum& sum, std::int64_t p);

double reduce(const PlaneWaveSum& sum, Point point);

/// Reads (m, n) back from the lattice frequencies and validates them with
/// make_state. Throws kInvalidQuantumNumbers once lowering has gone past the
/// bottom of the tower, kZeroFunction on the degenerate sine state, and
/// kInvalidArgument when the terms do not match any eigenstate pattern.
EigenfunctionSpec canonical_state_of(const PlaneWaveSum& sum);

}  // namespace qbilliard
