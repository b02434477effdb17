#include "qbilliard/billiard.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qbilliard {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidQuantumNumbers: return "INVALID_QN";
    case ErrorCode::kZeroFunction: return "ZERO_FUNCTION";
    case ErrorCode::kFamilyMismatch: return "FAMILY_MISMATCH";
    case ErrorCode::kEmptyClass: return "EMPTY_CLASS";
    case ErrorCode::kStencilExitsDomain: return "STENCIL_EXITS_DOMAIN";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

std::string_view to_string(BilliardKind kind) {
  return kind == BilliardKind::kRightIsosceles ? "iso" : "equi";
}

std::string_view to_string(SymmetryFamily family) {
  switch (family) {
    case SymmetryFamily::kDefault: return "default";
    case SymmetryFamily::kCosine: return "cos";
    case SymmetryFamily::kSine: return "sin";
  }
  return "default";
}

SymmetryFamily default_family(BilliardKind kind) {
  return kind == BilliardKind::kRightIsosceles ? SymmetryFamily::kDefault
                                               : SymmetryFamily::kCosine;
}

double energy(BilliardKind kind, QuantumNumbers qn) {
  const double m = qn.m;
  const double n = qn.n;
  if (kind == BilliardKind::kRightIsosceles) return m * m + n * n;
  return 16.0 / 9.0 * (m * m + n * n - m * n);
}

double energy(const EigenfunctionSpec& spec) { return energy(spec.kind, spec.qn); }

EigenfunctionSpec make_state(BilliardKind kind, SymmetryFamily family, int m, int n) {
  const bool family_ok = kind == BilliardKind::kRightIsosceles
                             ? family == SymmetryFamily::kDefault
                             : family != SymmetryFamily::kDefault;
  if (!family_ok) {
    throw BilliardError(ErrorCode::kFamilyMismatch,
                        "family '" + std::string(to_string(family)) +
                            "' is not defined for billiard '" + std::string(to_string(kind)) +
                            "'");
  }
  if (n < 1 || m <= n) {
    throw BilliardError(ErrorCode::kInvalidQuantumNumbers,
                        "quantum numbers must satisfy m > n >= 1, got (" + std::to_string(m) +
                            "," + std::to_string(n) + ")");
  }
  if (kind == BilliardKind::kEquilateral && family == SymmetryFamily::kSine && m == 2 * n) {
    throw BilliardError(ErrorCode::kZeroFunction,
                        "sine family vanishes identically for m = 2n, got (" +
                            std::to_string(m) + "," + std::to_string(n) + ")");
  }
  EigenfunctionSpec spec{kind, family, {m, n}, 0.0};
  spec.energy = energy(spec);
  return spec;
}

double eval_point(const EigenfunctionSpec& spec, Point p) {
  const double m = spec.qn.m;
  const double n = spec.qn.n;
  if (spec.kind == BilliardKind::kRightIsosceles) {
    return std::sin(m * p.x) * std::sin(n * p.y) - std::sin(n * p.x) * std::sin(m * p.y);
  }
  const double u = 2.0 * p.x / 3.0;
  const double v = 2.0 * p.y / kSqrt3;
  if (spec.family == SymmetryFamily::kCosine) {
    return std::cos((2 * m - n) * u) * std::sin(n * v) -
           std::cos((2 * n - m) * u) * std::sin(m * v) +
           std::cos((m + n) * u) * std::sin((m - n) * v);
  }
  return std::sin((2 * m - n) * u) * std::sin(n * v) -
         std::sin((2 * n - m) * u) * std::sin(m * v) -
         std::sin((m + n) * u) * std::sin((m - n) * v);
}

Triangle triangle(BilliardKind kind) {
  if (kind == BilliardKind::kRightIsosceles) {
    return Triangle{{Point{0.0, 0.0}, Point{kPi, 0.0}, Point{kPi, kPi}}};
  }
  return Triangle{{Point{0.0, 0.0}, Point{kPi, 0.0}, Point{kPi / 2.0, kSqrt3 * kPi / 2.0}}};
}

BoundingBox bounding_box(const Triangle& tri) {
  BoundingBox box{tri.vertices[0].x, tri.vertices[0].x, tri.vertices[0].y, tri.vertices[0].y};
  for (const Point& v : tri.vertices) {
    box.x_min = std::min(box.x_min, v.x);
    box.x_max = std::max(box.x_max, v.x);
    box.y_min = std::min(box.y_min, v.y);
    box.y_max = std::max(box.y_max, v.y);
  }
  return box;
}

double edge_distance(const Triangle& tri, std::size_t edge, Point p) {
  const Point a = tri.vertices[edge];
  const Point b = tri.vertices[(edge + 1) % 3];
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return (dx * (p.y - a.y) - dy * (p.x - a.x)) / std::hypot(dx, dy);
}

bool contains(const Triangle& tri, Point p) {
  for (std::size_t e = 0; e < 3; ++e) {
    if (!(edge_distance(tri, e, p) > kBoundaryTolerance)) return false;
  }
  return true;
}

bool contains(BilliardKind kind, Point p) { return contains(triangle(kind), p); }

std::vector<Point> boundary_samples(const Triangle& tri, int count) {
  if (count < 3) {
    throw BilliardError(ErrorCode::kInvalidArgument, "boundary_samples needs count >= 3");
  }
  std::array<double, 3> lengths{};
  double perimeter = 0.0;
  for (std::size_t e = 0; e < 3; ++e) {
    const Point a = tri.vertices[e];
    const Point b = tri.vertices[(e + 1) % 3];
    lengths[e] = std::hypot(b.x - a.x, b.y - a.y);
    perimeter += lengths[e];
  }
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  std::size_t edge = 0;
  double edge_start = 0.0;
  for (int k = 0; k < count; ++k) {
    const double s = (k + 0.5) * perimeter / count;
    while (edge < 2 && s >= edge_start + lengths[edge]) {
      edge_start += lengths[edge];
      ++edge;
    }
    const double t = (s - edge_start) / lengths[edge];
    const Point a = tri.vertices[edge];
    const Point b = tri.vertices[(edge + 1) % 3];
    out.push_back(Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
  }
  return out;
}

std::vector<Point> boundary_samples(BilliardKind kind, int count) {
  return boundary_samples(triangle(kind), count);
}

void validate(const GridSpec& grid) {
  if (grid.resolution < 2) {
    throw BilliardError(ErrorCode::kInvalidArgument, "grid resolution must be >= 2");
  }
  if (!(grid.inset >= 0.0 && grid.inset < 0.5)) {
    throw BilliardError(ErrorCode::kInvalidArgument, "grid inset must lie in [0, 0.5)");
  }
}

double FieldGrid::x_at(int i) const {
  return box.x_min + (i + 0.5) * (box.x_max - box.x_min) / spec.resolution;
}

double FieldGrid::y_at(int j) const {
  return box.y_min + (j + 0.5) * (box.y_max - box.y_min) / spec.resolution;
}

FieldGrid eval_grid(const EigenfunctionSpec& spec, const GridSpec& grid) {
  const Triangle tri = triangle(spec.kind);
  // Both triangles have shortest side pi.
  const double margin = grid.inset * kPi;
  auto inside = [&](Point p) {
    if (!contains(tri, p)) return false;
    for (std::size_t e = 0; e < 3; ++e) {
      if (edge_distance(tri, e, p) < margin) return false;
    }
    return true;
  };
  return sample_field(bounding_box(tri), grid, inside,
                      [&](Point p) { return eval_point(spec, p); });
}

}  // namespace qbilliard
