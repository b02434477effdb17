#include "doctest.h"

#include <cmath>
#include <random>

#include "qbilliard/billiard.hpp"
#include "support/oracles.hpp"

using namespace qbilliard;

namespace {

constexpr auto kIso = BilliardKind::kRightIsosceles;
constexpr auto kEqui = BilliardKind::kEquilateral;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const BilliardError& e) {
    return e.code();
  }
  FAIL("expected BilliardError");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("make_state validates labels and fills in the energy") {
  const auto s = make_state(kIso, SymmetryFamily::kDefault, 7, 4);
  CHECK(s.qn == QuantumNumbers{7, 4});
  CHECK(s.energy == 65.0);

  CHECK(code_of([] { make_state(kEqui, SymmetryFamily::kSine, 2, 1); }) ==
        ErrorCode::kZeroFunction);
  CHECK(code_of([] { make_state(kEqui, SymmetryFamily::kSine, 8, 4); }) ==
        ErrorCode::kZeroFunction);
  CHECK(code_of([] { make_state(kIso, SymmetryFamily::kDefault, 4, 4); }) ==
        ErrorCode::kInvalidQuantumNumbers);
  CHECK(code_of([] { make_state(kIso, SymmetryFamily::kDefault, 3, 0); }) ==
        ErrorCode::kInvalidQuantumNumbers);
  CHECK(code_of([] { make_state(kIso, SymmetryFamily::kDefault, 2, 5); }) ==
        ErrorCode::kInvalidQuantumNumbers);
  CHECK(code_of([] { make_state(kIso, SymmetryFamily::kCosine, 3, 1); }) ==
        ErrorCode::kFamilyMismatch);
  CHECK(code_of([] { make_state(kEqui, SymmetryFamily::kDefault, 3, 1); }) ==
        ErrorCode::kFamilyMismatch);

  // The cosine family has no m = 2n degeneracy.
  CHECK_NOTHROW(make_state(kEqui, SymmetryFamily::kCosine, 2, 1));
}

TEST_CASE("eval_point closed forms") {
  const auto iso21 = make_state(kIso, SymmetryFamily::kDefault, 2, 1);
  CHECK(eval_point(iso21, {kPi / 2, kPi / 4}) == doctest::Approx(-1.0).epsilon(1e-15));

  const auto cos21 = make_state(kEqui, SymmetryFamily::kCosine, 2, 1);
  CHECK(eval_point(cos21, {kPi / 2, kSqrt3 * kPi / 6}) ==
        doctest::Approx(-3.0 * std::sqrt(3.0) / 2.0).epsilon(1e-14));

  // The reduced form 2 cos(2x) sin(2y/sqrt3) - sin(4y/sqrt3).
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int k = 0; k < 50; ++k) {
    const double x = u(rng);
    const double y = u(rng);
    const double reduced =
        2.0 * std::cos(2 * x) * std::sin(2 * y / std::sqrt(3.0)) - std::sin(4 * y / std::sqrt(3.0));
    CHECK(eval_point(cos21, {x, y}) == doctest::Approx(reduced).epsilon(1e-12));
  }
}

TEST_CASE("isosceles eigenfunction vanishes on the diagonal and is antisymmetric in m, n") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int k = 0; k < 200; ++k) {
    const auto s = oracle::random_spec(kIso, rng);
    const double t = u(rng);
    CHECK(eval_point(s, {t, t}) == 0.0);

    EigenfunctionSpec swapped = s;
    std::swap(swapped.qn.m, swapped.qn.n);
    const Point p{u(rng), u(rng)};
    CHECK(eval_point(swapped, p) == -eval_point(s, p));
  }
}

TEST_CASE("equilateral reflection parity about x = pi/2 when m + n = 0 mod 3") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, kPi);
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int m = n + 1; m <= n + 12; ++m) {
      if ((m + n) % 3 != 0) continue;
      const auto c = make_state(kEqui, SymmetryFamily::kCosine, m, n);
      for (int k = 0; k < 20; ++k) {
        const Point p{u(rng), u(rng)};
        CHECK(std::abs(eval_point(c, {kPi - p.x, p.y}) - eval_point(c, p)) < 1e-12);
        if (m != 2 * n) {
          const auto s = make_state(kEqui, SymmetryFamily::kSine, m, n);
          CHECK(std::abs(eval_point(s, {kPi - p.x, p.y}) + eval_point(s, p)) < 1e-12);
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 0);

  // Without the congruence neither parity holds.
  const auto c31 = make_state(kEqui, SymmetryFamily::kCosine, 3, 1);
  const Point p{0.7, 0.9};
  CHECK(std::abs(eval_point(c31, {kPi - p.x, p.y}) - eval_point(c31, p)) > 1e-3);
  CHECK(std::abs(eval_point(c31, {kPi - p.x, p.y}) + eval_point(c31, p)) > 1e-3);
}

TEST_CASE("energy matches a fourth-order finite-difference Laplacian") {
  CHECK(energy(make_state(kIso, SymmetryFamily::kDefault, 2, 1)) == 5.0);
  CHECK(energy(make_state(kEqui, SymmetryFamily::kCosine, 2, 1)) ==
        doctest::Approx(16.0 / 3.0).epsilon(1e-15));

  std::mt19937_64 rng(17);
  for (auto kind : {kIso, kEqui}) {
    for (int k = 0; k < 20; ++k) {
      const auto s = oracle::random_spec(kind, rng, {4, 6});
      const Point p = oracle::random_interior(kind, rng);
      auto f = [&](double x, double y) { return eval_point(s, {x, y}); };
      const double v = f(p.x, p.y);
      if (std::abs(v) < 0.2) continue;
      const double measured = -oracle::laplacian4(f, p.x, p.y, 1e-3) / v;
      CHECK(measured == doctest::Approx(s.energy).epsilon(1e-6));
    }
  }

  for (int n = 1; n <= 10; ++n) {
    for (auto kind : {kIso, kEqui}) {
      const auto family = default_family(kind);
      CHECK(energy(make_state(kind, family, n + 1, n)) < energy(make_state(kind, family, n + 2, n)));
    }
  }
}

TEST_CASE("contains uses strict interiors of the fixed triangles") {
  CHECK(contains(kIso, {kPi / 2, kPi / 4}));
  CHECK_FALSE(contains(kIso, {kPi / 4, kPi / 2}));
  CHECK_FALSE(contains(kIso, {1.0, 1.0}));
  CHECK_FALSE(contains(kIso, {1.0, 0.0}));
  CHECK(contains(kEqui, {kPi / 2, kSqrt3 * kPi / 4}));
  CHECK_FALSE(contains(kEqui, {0.1, 1.0}));
  CHECK_FALSE(contains(kEqui, {kPi / 2, kSqrt3 * kPi / 2}));
}

TEST_CASE("boundary samples lie on the edges and the eigenfunctions vanish there") {
  const auto three = boundary_samples(kIso, 3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].y == 0.0);
  CHECK(three[1].x == kPi);
  CHECK(three[2].x == doctest::Approx(three[2].y));

  CHECK_THROWS_AS(boundary_samples(kIso, 2), BilliardError);

  std::mt19937_64 rng(19);
  for (auto kind : {kIso, kEqui}) {
    const auto pts = boundary_samples(kind, 997);
    CHECK(pts.size() == 997);
    for (const Point& p : pts) CHECK_FALSE(contains(kind, p));
    for (int k = 0; k < 30; ++k) {
      const auto s = oracle::random_spec(kind, rng);
      double worst = 0.0;
      for (const Point& p : pts) worst = std::max(worst, std::abs(eval_point(s, p)));
      CHECK(worst <= 1e-12);
    }
  }
}

TEST_CASE("eval_grid masks and samples consistently") {
  const auto s = make_state(kIso, SymmetryFamily::kDefault, 2, 1);
  const FieldGrid tiny = eval_grid(s, {2, 0.0});
  REQUIRE(tiny.values.size() == 4);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      CHECK(tiny.inside(i, j) == contains(kIso, {tiny.x_at(i), tiny.y_at(j)}));
    }
  }

  const FieldGrid big = eval_grid(s, {512, 0.0});
  double peak = 0.0;
  bool all_negative = true;
  for (int j = 0; j < 512; ++j) {
    for (int i = 0; i < 512; ++i) {
      const auto k = big.index(i, j);
      if (!big.mask[k]) {
        CHECK(big.values[k] == 0.0);
        continue;
      }
      const Point p{big.x_at(i), big.y_at(j)};
      // Same formula, so equality is exact.
      if (big.values[k] != eval_point(s, p)) FAIL("grid value differs from eval_point");
      all_negative = all_negative && big.values[k] < 0.0 && oracle::iso21_factored(p.x, p.y) < 0.0;
      peak = std::max(peak, std::abs(big.values[k]));
    }
  }
  CHECK(all_negative);
  CHECK(peak > 0.0);

  const FieldGrid inset = eval_grid(s, {128, 0.1});
  const FieldGrid plain = eval_grid(s, {128, 0.0});
  int inset_cells = 0;
  int plain_cells = 0;
  for (std::size_t k = 0; k < inset.mask.size(); ++k) {
    inset_cells += inset.mask[k];
    plain_cells += plain.mask[k];
    if (inset.mask[k]) CHECK(plain.mask[k]);
  }
  CHECK(inset_cells < plain_cells);

  CHECK_THROWS_AS(eval_grid(s, {1, 0.0}), BilliardError);
  CHECK_THROWS_AS(eval_grid(s, {16, 0.5}), BilliardError);
}
