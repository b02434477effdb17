#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qbilliard/billiard.hpp"
#include "qbilliard/spectral_class.hpp"

namespace qbilliard {

/// Per-cell sign over the raster: -1, 0 or +1. Masked cells are 0; an inside
/// cell is 0 only when its sample is exactly 0.0.
struct SignGrid {
  int resolution = 0;
  std::vector<std::uint8_t> mask;
  std::vector<std::int8_t> signs;
};

enum class Connectivity { kFour = 4, kEight = 8 };

struct NodalReport {
  std::optional<EigenfunctionSpec> spec;
  std::optional<EquivalenceClass> klass;
  int resolution = 0;
  int connectivity = 4;
  int domain_count = 0;
  std::vector<std::size_t> domain_sizes;
  // Set when some domain has fewer than kMinDomainPixels cells.
  bool resolution_suspect = false;
};

inline constexpr std::size_t kMinDomainPixels = 4;

SignGrid sign_grid(const FieldGrid& field);

/// Connected components of constant nonzero sign inside the mask. Nodal
/// domains are counted with 4-connectivity; 8-connectivity is available
/// only to show that it merges domains meeting at a nodal crossing.
NodalReport count_domains(const SignGrid& grid,
                          Connectivity connectivity = Connectivity::kFour);

/// eval_grid + sign_grid + count_domains, with the spec and class filled in.
NodalReport nodal_report(const EigenfunctionSpec& spec, int resolution);

// Rectangle baseline: sin(m x) sin(n y) on (0, pi)^2 has an m x n
// checkerboard of domains.
int checkerboard_count(int m, int n);
FieldGrid rectangle_field(int m, int n, int resolution);

enum class RenderMode { kSign, kAmplitude };

/// 8-bit grayscale raster, top row first (largest y).
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

GrayImage nodal_render(const FieldGrid& field, RenderMode mode);

/// Binary PGM: "P5\n<w> <h>\n255\n" then raw bytes.
void write_pgm(std::ostream& out, const GrayImage& image);

}  // namespace qbilliard
