#include "qbilliard/spectral_class.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace qbilliard {

int modulus_factor(BilliardKind kind) { return kind == BilliardKind::kRightIsosceles ? 2 : 3; }

EquivalenceClass class_index(const EigenfunctionSpec& spec) {
  const int k = modulus_factor(spec.kind);
  return EquivalenceClass{spec.kind, spec.family, spec.qn.n, k, spec.qn.m % (k * spec.qn.n)};
}

EigenfunctionSpec lowest_in_class(BilliardKind kind, SymmetryFamily family, int n, int c) {
  // Validates kind/family compatibility up front.
  (void)make_state(kind, family, 3, 1);
  if (n < 1) {
    throw BilliardError(ErrorCode::kInvalidQuantumNumbers,
                        "class label needs n >= 1, got " + std::to_string(n));
  }
  const int modulus = modulus_factor(kind) * n;
  if (c < 0 || c >= modulus) {
    throw BilliardError(ErrorCode::kInvalidArgument,
                        "class index must lie in [0, " + std::to_string(modulus) + "), got " +
                            std::to_string(c));
  }
  // First member above n, then one more period in case it is degenerate.
  int m = c;
  while (m <= n) m += modulus;
  for (int period = 0; period < 2; ++period, m += modulus) {
    try {
      return make_state(kind, family, m, n);
    } catch (const BilliardError& e) {
      if (e.code() != ErrorCode::kZeroFunction) throw;
    }
  }
  throw BilliardError(ErrorCode::kEmptyClass, "no valid state with n = " + std::to_string(n) +
                                                  " and m = " + std::to_string(c) + " mod " +
                                                  std::to_string(modulus));
}

std::vector<EigenfunctionSpec> tower(BilliardKind kind, SymmetryFamily family, int n, int c,
                                     int count) {
  if (count < 1) throw BilliardError(ErrorCode::kInvalidArgument, "tower count must be >= 1");
  std::vector<EigenfunctionSpec> out;
  out.reserve(static_cast<std::size_t>(count));
  out.push_back(lowest_in_class(kind, family, n, c));
  while (static_cast<int>(out.size()) < count) out.push_back(step(out.back(), 1));
  return out;
}

EigenfunctionSpec step(const EigenfunctionSpec& spec, int p) {
  const std::int64_t target =
      spec.qn.m + static_cast<std::int64_t>(modulus_factor(spec.kind)) * spec.qn.n * p;
  if (target > std::numeric_limits<int>::max()) {
    throw BilliardError(ErrorCode::kInvalidArgument, "raising step overflows m");
  }
  if (target <= spec.qn.n) {
    throw BilliardError(ErrorCode::kInvalidQuantumNumbers,
                        "lowering by " + std::to_string(-p) + " gives m = " +
                            std::to_string(target) + ", which violates m > n = " +
                            std::to_string(spec.qn.n));
  }
  return make_state(spec.kind, spec.family, static_cast<int>(target), spec.qn.n);
}

}  // namespace qbilliard
