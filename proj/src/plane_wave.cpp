#include "qbilliard/plane_wave.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qbilliard {
namespace {

// Term layouts for (m, n), in diagonal-slot order. The sine family puts
// +(2n-m, m) in the second slot, which carries the (-3n, +3n) shift.
std::vector<PlaneWaveTerm> isosceles_terms(std::int64_t m, std::int64_t n) {
  return {
      {+1, m, -n, 2 * n, 0},
      {-1, m, n, 2 * n, 0},
      {-1, -n, m, 0, 2 * n},
      {+1, n, m, 0, 2 * n},
  };
}

std::vector<PlaneWaveTerm> cosine_terms(std::int64_t m, std::int64_t n) {
  return {
      {+1, 2 * m - n, n, 6 * n, 0},
      {-1, 2 * m - n, -n, 6 * n, 0},
      {-1, 2 * n - m, m, -3 * n, 3 * n},
      {+1, 2 * n - m, -m, -3 * n, -3 * n},
      {-1, m + n, n - m, 3 * n, -3 * n},
      {+1, m + n, m - n, 3 * n, 3 * n},
  };
}

std::vector<PlaneWaveTerm> sine_terms(std::int64_t m, std::int64_t n) {
  return {
      {+1, 2 * m - n, -n, 6 * n, 0},
      {-1, 2 * m - n, n, 6 * n, 0},
      {+1, 2 * n - m, m, -3 * n, 3 * n},
      {-1, 2 * n - m, -m, -3 * n, -3 * n},
      {-1, m + n, n - m, 3 * n, -3 * n},
      {+1, m + n, m - n, 3 * n, 3 * n},
  };
}

std::vector<PlaneWaveTerm> terms_for(BilliardKind kind, SymmetryFamily family, std::int64_t m,
                                     std::int64_t n) {
  if (kind == BilliardKind::kRightIsosceles) return isosceles_terms(m, n);
  return family == SymmetryFamily::kCosine ? cosine_terms(m, n) : sine_terms(m, n);
}

[[noreturn]] void not_an_eigenstate() {
  throw BilliardError(ErrorCode::kInvalidArgument,
                      "plane-wave sum does not match any eigenstate pattern");
}

}  // namespace

LatticeBasis lattice_basis(BilliardKind kind) {
  if (kind == BilliardKind::kRightIsosceles) return {1.0, 1.0};
  return {2.0 / 3.0, 2.0 / kSqrt3};
}

PlaneWaveSum plane_wave_rep(const EigenfunctionSpec& spec) {
  PlaneWaveSum sum;
  sum.kind = spec.kind;
  sum.family = spec.family;
  sum.reduction = spec.family == SymmetryFamily::kCosine ? Reduction::kHalfImag
                                                         : Reduction::kHalfReal;
  sum.terms = terms_for(spec.kind, spec.family, spec.qn.m, spec.qn.n);
  return sum;
}

PlaneWaveSum ladder_shift(const PlaneWaveSum& sum, std::int64_t p) {
  PlaneWaveSum out = sum;
  for (PlaneWaveTerm& t : out.terms) {
    t.a += p * t.shift_a;
    t.b += p * t.shift_b;
  }
  return out;
}

double reduce(const PlaneWaveSum& sum, Point point) {
  const LatticeBasis basis = sum.basis();
  const double kx = basis.unit_x * point.x;
  const double ky = basis.unit_y * point.y;
  double acc = 0.0;
  for (const PlaneWaveTerm& t : sum.terms) {
    const double phase = static_cast<double>(t.a) * kx + static_cast<double>(t.b) * ky;
    acc += t.sign * (sum.reduction == Reduction::kHalfReal ? std::cos(phase) : std::sin(phase));
  }
  return 0.5 * acc;
}

EigenfunctionSpec canonical_state_of(const PlaneWaveSum& sum) {
  if (sum.terms.empty()) not_an_eigenstate();
  const PlaneWaveTerm& first = sum.terms.front();
  std::int64_t m = 0;
  std::int64_t n = 0;
  if (sum.kind == BilliardKind::kRightIsosceles) {
    m = first.a;
    n = -first.b;
  } else {
    n = sum.family == SymmetryFamily::kCosine ? first.b : -first.b;
    if ((first.a + n) % 2 != 0) not_an_eigenstate();
    m = (first.a + n) / 2;
  }
  constexpr auto kIntMax = std::numeric_limits<int>::max();
  if (m > kIntMax || n > kIntMax || m < -kIntMax || n < -kIntMax) not_an_eigenstate();

  // Any pattern that is not the image of a valid state under ladder_shift is
  // rejected, before or after quantum-number validation.
  PlaneWaveSum expected;
  expected.kind = sum.kind;
  expected.family = sum.family;
  expected.reduction = sum.family == SymmetryFamily::kCosine ? Reduction::kHalfImag
                                                             : Reduction::kHalfReal;
  expected.terms = terms_for(sum.kind, sum.family, m, n);
  if (!(expected == sum)) not_an_eigenstate();

  return make_state(sum.kind, sum.family, static_cast<int>(m), static_cast<int>(n));
}

}  // namespace qbilliard
