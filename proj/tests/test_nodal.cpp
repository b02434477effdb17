#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <random>
#include <sstream>

#include "qbilliard/nodal.hpp"
#include "support/oracles.hpp"

using namespace qbilliard;

namespace {

constexpr auto kIso = BilliardKind::kRightIsosceles;

FieldGrid constant_field(int res, double value) {
  return sample_field(BoundingBox{0, 1, 0, 1}, GridSpec{res, 0.0},
                      [](Point p) { return p.x + p.y < 1.5; }, [=](Point) { return value; });
}

}  // namespace

TEST_CASE("sign_grid follows the field and zeroes the mask") {
  const FieldGrid f = constant_field(32, 2.5);
  const SignGrid g = sign_grid(f);
  for (std::size_t k = 0; k < g.signs.size(); ++k) CHECK(g.signs[k] == (f.mask[k] ? 1 : 0));

  const FieldGrid iso21 = eval_grid(make_state(kIso, SymmetryFamily::kDefault, 2, 1), {512, 0.0});
  const SignGrid s = sign_grid(iso21);
  std::set<int> signs;
  for (std::size_t k = 0; k < s.signs.size(); ++k) {
    if (s.mask[k]) signs.insert(s.signs[k]);
  }
  CHECK(signs == std::set<int>{-1});
}

TEST_CASE("count_domains on the isosceles factorisation cases") {
  const auto r21 = nodal_report(make_state(kIso, SymmetryFamily::kDefault, 2, 1), 512);
  CHECK(r21.domain_count == 1);
  CHECK_FALSE(r21.resolution_suspect);
  REQUIRE(r21.klass);
  CHECK(r21.klass->c == 0);

  const auto r31 = nodal_report(make_state(kIso, SymmetryFamily::kDefault, 3, 1), 512);
  CHECK(r31.domain_count == 2);

  // Sizes account for every nonzero inside pixel.
  const FieldGrid f = eval_grid(make_state(kIso, SymmetryFamily::kDefault, 3, 1), {512, 0.0});
  const SignGrid g = sign_grid(f);
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < g.signs.size(); ++k) nonzero += (g.mask[k] && g.signs[k] != 0);
  CHECK(std::accumulate(r31.domain_sizes.begin(), r31.domain_sizes.end(), std::size_t{0}) ==
        nonzero);
}

TEST_CASE("checkerboard oracle") {
  CHECK(checkerboard_count(1, 1) == 1);
  CHECK(checkerboard_count(3, 2) == 6);
  CHECK(checkerboard_count(7, 4) == 28);
  CHECK_THROWS_AS(checkerboard_count(0, 3), BilliardError);

  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      const int res = 16 * std::max(m, n);
      CHECK(count_domains(sign_grid(rectangle_field(m, n, res))).domain_count ==
            checkerboard_count(m, n));
    }
  }
}

TEST_CASE("8-connectivity merges domains meeting at a crossing") {
  const SignGrid g = sign_grid(rectangle_field(2, 2, 64));
  CHECK(count_domains(g, Connectivity::kFour).domain_count == 4);
  CHECK(count_domains(g, Connectivity::kEight).domain_count == 2);
  const SignGrid g21 = sign_grid(rectangle_field(2, 1, 64));
  CHECK(count_domains(g21, Connectivity::kFour).domain_count == 2);
}

TEST_CASE("count_domains matches a union-find count on random sign grids") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> sign(-1, 1);
  std::bernoulli_distribution in(0.85);
  for (int trial = 0; trial < 50; ++trial) {
    SignGrid g;
    g.resolution = 40;
    for (int k = 0; k < 1600; ++k) {
      g.mask.push_back(in(rng) ? 1 : 0);
      g.signs.push_back(g.mask.back() ? static_cast<std::int8_t>(sign(rng)) : 0);
    }
    const NodalReport r = count_domains(g);
    CHECK(r.domain_count == oracle::union_find_components(40, g.mask, g.signs));
    CHECK(r.resolution_suspect);
  }
}

TEST_CASE("domain count is invariant under a global sign flip") {
  FieldGrid f = eval_grid(make_state(kIso, SymmetryFamily::kDefault, 9, 4), {256, 0.0});
  const int before = count_domains(sign_grid(f)).domain_count;
  for (double& v : f.values) v = -v;
  CHECK(count_domains(sign_grid(f)).domain_count == before);
}

TEST_CASE("nodal_render maps signs and amplitudes to bytes") {
  const FieldGrid f = constant_field(16, 3.0);
  const GrayImage img = nodal_render(f, RenderMode::kSign);
  CHECK(img.width == 16);
  for (int j = 0; j < 16; ++j) {
    for (int i = 0; i < 16; ++i) {
      const auto byte = img.pixels[static_cast<std::size_t>((15 - j) * 16 + i)];
      CHECK(byte == (f.inside(i, j) ? 255 : 128));
    }
  }
  const GrayImage amp = nodal_render(f, RenderMode::kAmplitude);
  CHECK(amp.pixels[15 * 16] == 255);

  const FieldGrid iso = eval_grid(make_state(kIso, SymmetryFamily::kDefault, 7, 4), {128, 0.0});
  const GrayImage a = nodal_render(iso, RenderMode::kAmplitude);
  const GrayImage b = nodal_render(iso, RenderMode::kAmplitude);
  CHECK(a.pixels == b.pixels);
  // The larger lobe saturates one end of the range.
  const auto lo = *std::min_element(a.pixels.begin(), a.pixels.end());
  const auto hi = *std::max_element(a.pixels.begin(), a.pixels.end());
  CHECK((lo == 0 || hi == 255));
  CHECK(lo < 128);
  CHECK(hi > 128);

  std::ostringstream os;
  write_pgm(os, a);
  const std::string bytes = os.str();
  CHECK(bytes.rfind("P5\n128 128\n255\n", 0) == 0);
  CHECK(bytes.size() == 15 + 128 * 128);
}
