#include "qbilliard/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

#include "qbilliard/plane_wave.hpp"
#include "qbilliard/spectral_class.hpp"

namespace qbilliard {
namespace {

constexpr int kResidualCandidates = 48;
constexpr double kAmplitudeFloor = 0.1;

std::string label(const EigenfunctionSpec& spec) {
  std::ostringstream os;
  os << to_string(spec.kind) << '/' << to_string(spec.family) << " (" << spec.qn.m << ','
     << spec.qn.n << ')';
  return os.str();
}

std::vector<Point> residual_points(const EigenfunctionSpec& spec, double h) {
  if (!(h > 0.0)) throw BilliardError(ErrorCode::kInvalidArgument, "step size h must be > 0");
  const Triangle tri = triangle(spec.kind);
  const BoundingBox box = bounding_box(tri);
  std::vector<std::pair<Point, double>> admissible;
  double peak = 0.0;
  for (int j = 0; j < kResidualCandidates; ++j) {
    for (int i = 0; i < kResidualCandidates; ++i) {
      const Point p{box.x_min + (i + 0.5) * (box.x_max - box.x_min) / kResidualCandidates,
                    box.y_min + (j + 0.5) * (box.y_max - box.y_min) / kResidualCandidates};
      if (!contains(tri, p) || !contains(tri, {p.x + h, p.y}) || !contains(tri, {p.x - h, p.y}) ||
          !contains(tri, {p.x, p.y + h}) || !contains(tri, {p.x, p.y - h})) {
        continue;
      }
      const double v = std::abs(eval_point(spec, p));
      peak = std::max(peak, v);
      admissible.emplace_back(p, v);
    }
  }
  std::vector<Point> points;
  for (const auto& [p, v] : admissible) {
    if (v > kAmplitudeFloor * peak) points.push_back(p);
  }
  if (static_cast<int>(points.size()) < kMinResidualPoints) {
    throw BilliardError(ErrorCode::kStencilExitsDomain,
                        "only " + std::to_string(points.size()) +
                            " admissible stencil points for h = " + std::to_string(h));
  }
  return points;
}

double max_relative_residual(const EigenfunctionSpec& spec, const std::vector<Point>& points,
                             double h) {
  const double e = energy(spec);
  double worst = 0.0;
  for (const Point& p : points) {
    const double centre = eval_point(spec, p);
    const double lap = (eval_point(spec, {p.x + h, p.y}) + eval_point(spec, {p.x - h, p.y}) +
                        eval_point(spec, {p.x, p.y + h}) + eval_point(spec, {p.x, p.y - h}) -
                        4.0 * centre) /
                       (h * h);
    worst = std::max(worst, std::abs(-lap / centre - e) / e);
  }
  return worst;
}

}  // namespace

ResidualReport helmholtz_residual(const EigenfunctionSpec& spec, double h) {
  const auto points = residual_points(spec, h);
  return ResidualReport{spec, h, static_cast<int>(points.size()),
                        max_relative_residual(spec, points, h), std::nullopt};
}

ResidualReport helmholtz_convergence(const EigenfunctionSpec& spec, double h) {
  const auto points = residual_points(spec, h);
  ResidualReport report{spec, h, static_cast<int>(points.size()),
                        max_relative_residual(spec, points, h), std::nullopt};
  const double halved = max_relative_residual(spec, points, h / 2.0);
  report.order = std::log2(report.max_relative_residual / halved);
  return report;
}

double boundary_residual(const EigenfunctionSpec& spec, const Triangle& boundary, int count) {
  double worst = 0.0;
  for (const Point& p : boundary_samples(boundary, count)) {
    worst = std::max(worst, std::abs(eval_point(spec, p)));
  }
  return worst;
}

double boundary_residual(const EigenfunctionSpec& spec, int count) {
  return boundary_residual(spec, triangle(spec.kind), count);
}

double ladder_identity_check(const EigenfunctionSpec& spec, int p, int resolution) {
  if (resolution < 2) {
    throw BilliardError(ErrorCode::kInvalidArgument, "ladder check resolution must be >= 2");
  }
  const EigenfunctionSpec target = step(spec, p);
  const PlaneWaveSum shifted = ladder_shift(plane_wave_rep(spec), p);
  const BoundingBox box = bounding_box(triangle(spec.kind));
  const double dx = (box.x_max - box.x_min) / (resolution - 1);
  const double dy = (box.y_max - box.y_min) / (resolution - 1);
  double worst = 0.0;
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      const Point q{box.x_min + i * dx, box.y_min + j * dy};
      worst = std::max(worst, std::abs(reduce(shifted, q) - eval_point(target, q)));
    }
  }
  return worst;
}

double orthogonality(const EigenfunctionSpec& a, const EigenfunctionSpec& b, int resolution) {
  if (a.kind != b.kind) {
    throw BilliardError(ErrorCode::kInvalidArgument, "orthogonality needs states of one billiard");
  }
  const GridSpec grid{resolution, 0.0};
  const FieldGrid fa = eval_grid(a, grid);
  const FieldGrid fb = eval_grid(b, grid);
  double ab = 0.0;
  double aa = 0.0;
  double bb = 0.0;
  for (std::size_t k = 0; k < fa.values.size(); ++k) {
    if (!fa.mask[k]) continue;
    ab += fa.values[k] * fb.values[k];
    aa += fa.values[k] * fa.values[k];
    bb += fb.values[k] * fb.values[k];
  }
  return std::abs(ab) / std::sqrt(aa * bb);
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

namespace {

// Accumulates one named check across the suite.
class Tally {
 public:
  Tally(std::string name, double tolerance) : result_{std::move(name), 0, 0, 0.0, tolerance, {}} {}

  void value(double v, const std::string& where) {
    ++result_.evaluated;
    if (!(v <= result_.tolerance)) ++result_.failed;
    if (!(v <= result_.worst) || result_.evaluated == 1) {
      result_.worst = v;
      result_.worst_case = where;
    }
  }

  void outcome(bool ok, const std::string& where) {
    ++result_.evaluated;
    if (!ok) {
      ++result_.failed;
      result_.worst = static_cast<double>(result_.failed);
      result_.worst_case = where;
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

Triangle perturbed(BilliardKind kind, double delta) {
  Triangle tri = triangle(kind);
  for (Point& v : tri.vertices) {
    v.x += delta;
    v.y += delta;
  }
  return tri;
}

bool throws_invalid_qn(auto&& fn) {
  try {
    fn();
  } catch (const BilliardError& e) {
    return e.code() == ErrorCode::kInvalidQuantumNumbers;
  }
  return false;
}

// Fixed probe points for the pointwise symmetry checks.
std::vector<Point> symmetry_probes(BilliardKind kind) {
  const BoundingBox box = bounding_box(triangle(kind));
  std::vector<Point> out;
  for (int j = 0; j < 9; ++j) {
    for (int i = 0; i < 9; ++i) {
      out.push_back({box.x_min + (i + 0.37) * (box.x_max - box.x_min) / 9.0,
                     box.y_min + (j + 0.61) * (box.y_max - box.y_min) / 9.0});
    }
  }
  return out;
}

double symmetry_defect(const EigenfunctionSpec& spec) {
  double worst = 0.0;
  if (spec.kind == BilliardKind::kRightIsosceles) {
    EigenfunctionSpec swapped = spec;
    std::swap(swapped.qn.m, swapped.qn.n);
    for (const Point& p : symmetry_probes(spec.kind)) {
      worst = std::max(worst, std::abs(eval_point(swapped, p) + eval_point(spec, p)));
    }
    return worst;
  }
  const double parity = spec.family == SymmetryFamily::kCosine ? 1.0 : -1.0;
  for (const Point& p : symmetry_probes(spec.kind)) {
    worst = std::max(worst,
                     std::abs(eval_point(spec, {kPi - p.x, p.y}) - parity * eval_point(spec, p)));
  }
  return worst;
}

}  // namespace

SuiteReport run_suite(BilliardKind kind, SymmetryFamily family, const SuiteRanges& ranges,
                      const SuiteTolerances& tol) {
  SuiteReport report;
  report.kind = kind;
  report.family = family;

  Tally representation("representation", tol.representation);
  Tally ladder("ladder_identity", tol.ladder);
  Tally round_trip("lowering_round_trip", 0.0);
  Tally bottom("tower_bottom", 0.0);
  Tally classes("class_preservation", 0.0);
  Tally boundary("dirichlet_boundary", tol.boundary);
  Tally helmholtz("helmholtz_residual", tol.helmholtz);
  Tally order("convergence_order", tol.order_window);
  Tally ortho("orthogonality", tol.orthogonality);
  Tally symmetry("symmetry", tol.representation);

  const Triangle boundary_tri = perturbed(kind, ranges.vertex_perturbation);
  const int k = modulus_factor(kind);

  for (int n = ranges.n_min; n <= ranges.n_max; ++n) {
    for (int m = n + 1; m <= n + ranges.m_span; ++m) {
      if (kind == BilliardKind::kEquilateral && family == SymmetryFamily::kSine && m == 2 * n) {
        continue;
      }
      const EigenfunctionSpec spec = make_state(kind, family, m, n);
      const std::string where = label(spec);
      const PlaneWaveSum rep = plane_wave_rep(spec);

      representation.value(ladder_identity_check(spec, 0, ranges.ladder_resolution), where);

      for (int p = 1; p <= ranges.p_max; ++p) {
        const std::string wp = where + " p=" + std::to_string(p);
        ladder.value(ladder_identity_check(spec, p, ranges.ladder_resolution), wp);
        const PlaneWaveSum up = ladder_shift(rep, p);
        const EigenfunctionSpec raised = step(spec, p);
        round_trip.outcome(ladder_shift(up, -p) == rep && step(raised, -p) == spec &&
                               canonical_state_of(up) == raised,
                           wp);
        classes.outcome(class_index(raised) == class_index(spec), wp);
      }

      // Lowering far enough to break m > n must be refused on both routes.
      const int below = (m - n + k * n - 1) / (k * n);
      bottom.outcome(throws_invalid_qn([&] { (void)step(spec, -below); }) &&
                         throws_invalid_qn([&] { (void)canonical_state_of(ladder_shift(rep, -below)); }),
                     where);

      boundary.value(boundary_residual(spec, boundary_tri, ranges.boundary_count), where);

      const ResidualReport res = helmholtz_convergence(spec, ranges.helmholtz_h);
      helmholtz.value(res.max_relative_residual, where);
      order.value(std::abs(*res.order - tol.order_target), where);

      const int next_m = (kind == BilliardKind::kEquilateral && family == SymmetryFamily::kSine &&
                          m + 1 == 2 * n)
                             ? m + 2
                             : m + 1;
      ortho.value(orthogonality(spec, make_state(kind, family, next_m, n),
                                ranges.orthogonality_resolution),
                  where + " vs m=" + std::to_string(next_m));

      // Reflection parity of the equilateral families exists only for m + n = 0 mod 3.
      if (kind == BilliardKind::kRightIsosceles || (m + n) % 3 == 0) {
        symmetry.value(symmetry_defect(spec), where);
      }
    }
  }

  for (Tally* t : {&representation, &ladder, &round_trip, &bottom, &classes, &boundary,
                   &helmholtz, &order, &ortho, &symmetry}) {
    report.checks.push_back(t->take());
    report.total_evaluated += report.checks.back().evaluated;
  }
  report.vacuous = report.total_evaluated == 0;
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << to_string(report.kind) << '/' << to_string(report.family) << ": "
     << (report.passed() ? "PASS" : "FAIL");
  if (report.vacuous) os << " (vacuous: no checks executed)";
  os << '\n';
  for (const CheckResult& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "  %-20s %s  n=%-5d worst=%.3e tol=%.1e", c.name.c_str(),
                  c.passed() ? "ok  " : "FAIL", c.evaluated, c.worst, c.tolerance);
    os << line;
    if (!c.worst_case.empty()) os << "  at " << c.worst_case;
    os << '\n';
  }
  return os.str();
}

}  // namespace qbilliard
