#pragma once

#include <vector>

#include "qbilliard/billiard.hpp"

namespace qbilliard {

/// States sharing n and the residue c = m mod (k n). k is 2 for the right
/// isosceles triangle and 3 for the equilateral one. Cosine and sine
/// equilateral states never share a class.
struct EquivalenceClass {
  BilliardKind kind = BilliardKind::kRightIsosceles;
  SymmetryFamily family = SymmetryFamily::kDefault;
  int n = 1;
  int k = 2;
  int c = 0;

  int modulus() const { return k * n; }

  friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
};

int modulus_factor(BilliardKind kind);

EquivalenceClass class_index(const EigenfunctionSpec& spec);

/// Smallest-m valid member of the class (n, c). Scans upward, so residues
/// c <= n and the degenerate sine state m = 2n are skipped.
EigenfunctionSpec lowest_in_class(BilliardKind kind, SymmetryFamily family, int n, int c);

/// The `count` lowest members in ascending energy, one raising step apart.
std::vector<EigenfunctionSpec> tower(BilliardKind kind, SymmetryFamily family, int n, int c,
                                     int count);

/// m -> m + k n p, validated by make_state.
EigenfunctionSpec step(const EigenfunctionSpec& spec, int p);

}  // namespace qbilliard
