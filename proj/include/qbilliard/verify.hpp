#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbilliard/billiard.hpp"

namespace qbilliard {

struct ResidualReport {
  EigenfunctionSpec spec;
  double h = 0.0;
  int points = 0;
  // max |(-lap_h psi)/psi - E| / E over the admissible points.
  double max_relative_residual = 0.0;
  // log2 of residual(h) / residual(h/2); present only when both were run.
  std::optional<double> order;
};

/// Five-point Laplacian eigenvalue check at points whose stencil lies in the
/// interior and where |psi| > 0.1 max|psi|. Throws kStencilExitsDomain when
/// fewer than kMinResidualPoints points qualify.
ResidualReport helmholtz_residual(const EigenfunctionSpec& spec, double h);

/// Same point set evaluated at h and h/2; fills in the observed order.
ResidualReport helmholtz_convergence(const EigenfunctionSpec& spec, double h);

inline constexpr int kMinResidualPoints = 100;

/// max |psi| over boundary_samples. The triangle overload lets a caller
/// probe a displaced boundary.
double boundary_residual(const EigenfunctionSpec& spec, int count);
double boundary_residual(const EigenfunctionSpec& spec, const Triangle& boundary, int count);

/// Sup-norm over a resolution x resolution raster of the bounding box
/// (edges included) of |reduce(T^p rep(spec)) - psi_{step(spec, p)}|.
double ladder_identity_check(const EigenfunctionSpec& spec, int p, int resolution);

/// |<a, b>| / (|a| |b|) by the midpoint rule over interior raster cells.
double orthogonality(const EigenfunctionSpec& a, const EigenfunctionSpec& b, int resolution);

struct SuiteTolerances {
  double ladder = 1e-9;
  double representation = 1e-12;
  double boundary = 1e-12;
  double helmholtz = 1e-4;
  double order_target = 2.0;
  double order_window = 0.2;
  double orthogonality = 1e-3;
};

struct SuiteRanges {
  int n_min = 1;
  int n_max = 6;
  // m runs over (n, n + m_span].
  int m_span = 12;
  int p_max = 3;
  int ladder_resolution = 201;
  int boundary_count = 1000;
  double helmholtz_h = 1e-3;
  int orthogonality_resolution = 400;
  // Every triangle vertex is displaced by (delta, delta) for the boundary
  // check only. Non-zero values exist to show the check has power.
  double vertex_perturbation = 0.0;
};

struct CheckResult {
  std::string name;
  int evaluated = 0;
  int failed = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  std::string worst_case;

  bool passed() const { return failed == 0; }
};

struct SuiteReport {
  BilliardKind kind = BilliardKind::kRightIsosceles;
  SymmetryFamily family = SymmetryFamily::kDefault;
  std::vector<CheckResult> checks;
  int total_evaluated = 0;
  bool vacuous = false;

  bool passed() const;
};

/// Runs every check over the Cartesian product of the ranges. Failures are
/// recorded in the report, never thrown.
SuiteReport run_suite(BilliardKind kind, SymmetryFamily family, const SuiteRanges& ranges,
                      const SuiteTolerances& tolerances = {});

std::string format_report(const SuiteReport& report);

}  // namespace qbilliard
