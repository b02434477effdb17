#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

#include "qbilliard/error.hpp"

namespace qbilliard {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt3 = std::numbers::sqrt3;

enum class BilliardKind { kRightIsosceles, kEquilateral };

// Right isosceles admits only kDefault; the equilateral triangle has a
// cosine family and a sine family.
enum class SymmetryFamily { kDefault, kCosine, kSine };

std::string_view to_string(BilliardKind kind);
std::string_view to_string(SymmetryFamily family);

struct QuantumNumbers {
  int m = 0;
  int n = 0;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// Identity of one eigenstate. Only make_state() produces valid instances.
struct EigenfunctionSpec {
  BilliardKind kind = BilliardKind::kRightIsosceles;
  SymmetryFamily family = SymmetryFamily::kDefault;
  QuantumNumbers qn;
  double energy = 0.0;

  friend bool operator==(const EigenfunctionSpec&, const EigenfunctionSpec&) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Triangle given by its vertices in counter-clockwise order.
struct Triangle {
  std::array<Point, 3> vertices;
};

struct BoundingBox {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
};

struct GridSpec {
  int resolution = 512;
  // Margin kept clear of every edge, as a fraction of the shortest side.
  double inset = 0.0;
};

/// Cell-centred raster over a bounding box. Row j holds samples at
/// y = y_min + (j + 1/2) dy, so row 0 is the bottom of the domain.
struct FieldGrid {
  GridSpec spec;
  BoundingBox box;
  std::vector<double> values;
  std::vector<std::uint8_t> mask;

  int resolution() const { return spec.resolution; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(spec.resolution) +
           static_cast<std::size_t>(i);
  }
  double x_at(int i) const;
  double y_at(int j) const;
  bool inside(int i, int j) const { return mask[index(i, j)] != 0; }
};

// Validates the labels and fills in the energy. Throws BilliardError with
// kFamilyMismatch, kInvalidQuantumNumbers or kZeroFunction.
EigenfunctionSpec make_state(BilliardKind kind, SymmetryFamily family, int m, int n);

// Default family for a billiard: kDefault (isosceles) or kCosine.
SymmetryFamily default_family(BilliardKind kind);

/// Closed-form, unnormalised eigenfunction value. Defined on the whole plane.
double eval_point(const EigenfunctionSpec& spec, Point point);

/// m^2 + n^2 (isosceles) or (16/9)(m^2 + n^2 - mn) (equilateral), with hbar^2/2M = 1.
double energy(const EigenfunctionSpec& spec);
double energy(BilliardKind kind, QuantumNumbers qn);

/// Side length pi. Isosceles: (0,0),(pi,0),(pi,pi). Equilateral:
/// (0,0),(pi,0),(pi/2, sqrt(3) pi/2).
Triangle triangle(BilliardKind kind);
BoundingBox bounding_box(const Triangle& tri);

// Signed distance of `point` from the edge starting at vertex `edge`;
// positive on the interior side.
double edge_distance(const Triangle& tri, std::size_t edge, Point point);

/// Strict interior test: every edge distance must exceed kBoundaryTolerance.
bool contains(const Triangle& tri, Point point);
bool contains(BilliardKind kind, Point point);
inline constexpr double kBoundaryTolerance = 1e-12;

/// `count` points spread uniformly by arc length over the perimeter, at the
/// midpoints of `count` equal arcs, so no vertex is ever returned.
std::vector<Point> boundary_samples(const Triangle& tri, int count);
std::vector<Point> boundary_samples(BilliardKind kind, int count);

void validate(const GridSpec& grid);

/// Samples `fn` on the cell centres of `box`. Cells where `inside` is false
/// are masked out and hold 0.
template <class InsideFn, class ValueFn>
FieldGrid sample_field(const BoundingBox& box, const GridSpec& grid, InsideFn&& inside,
                       ValueFn&& fn) {
  validate(grid);
  FieldGrid field{grid, box, {}, {}};
  const auto cells = static_cast<std::size_t>(grid.resolution) *
                     static_cast<std::size_t>(grid.resolution);
  field.values.assign(cells, 0.0);
  field.mask.assign(cells, 0);
  for (int j = 0; j < grid.resolution; ++j) {
    const double y = field.y_at(j);
    for (int i = 0; i < grid.resolution; ++i) {
      const Point p{field.x_at(i), y};
      if (!inside(p)) continue;
      const auto idx = field.index(i, j);
      field.mask[idx] = 1;
      field.values[idx] = fn(p);
    }
  }
  return field;
}

/// eval_point over the triangle's bounding box, masked to the interior
/// minus the inset margin.
FieldGrid eval_grid(const EigenfunctionSpec& spec, const GridSpec& grid);

}  // namespace qbilliard
