#include "qbilliard/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace qbilliard {

SignGrid sign_grid(const FieldGrid& field) {
  SignGrid grid;
  grid.resolution = field.resolution();
  grid.mask = field.mask;
  grid.signs.assign(field.values.size(), 0);
  for (std::size_t k = 0; k < field.values.size(); ++k) {
    if (!field.mask[k]) continue;
    const double v = field.values[k];
    grid.signs[k] = static_cast<std::int8_t>((v > 0.0) - (v < 0.0));
  }
  return grid;
}

NodalReport count_domains(const SignGrid& grid, Connectivity connectivity) {
  NodalReport report;
  report.resolution = grid.resolution;
  report.connectivity = static_cast<int>(connectivity);

  const int res = grid.resolution;
  const auto cells = grid.signs.size();
  constexpr int kUnlabelled = -1;
  std::vector<int> label(cells, kUnlabelled);
  std::vector<std::size_t> stack;

  static constexpr int kOffsets4[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  static constexpr int kOffsets8[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                          {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
  const int neighbours = connectivity == Connectivity::kFour ? 4 : 8;
  const auto& offsets = connectivity == Connectivity::kFour ? kOffsets4 : kOffsets8;

  for (std::size_t seed = 0; seed < cells; ++seed) {
    if (!grid.mask[seed] || grid.signs[seed] == 0 || label[seed] != kUnlabelled) continue;
    const int id = report.domain_count++;
    const std::int8_t sign = grid.signs[seed];
    std::size_t size = 0;
    label[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      ++size;
      const int i = static_cast<int>(cur % static_cast<std::size_t>(res));
      const int j = static_cast<int>(cur / static_cast<std::size_t>(res));
      for (int k = 0; k < neighbours; ++k) {
        const int ni = i + offsets[k][0];
        const int nj = j + offsets[k][1];
        if (ni < 0 || nj < 0 || ni >= res || nj >= res) continue;
        const auto nb = static_cast<std::size_t>(nj) * static_cast<std::size_t>(res) +
                        static_cast<std::size_t>(ni);
        if (!grid.mask[nb] || grid.signs[nb] != sign || label[nb] != kUnlabelled) continue;
        label[nb] = id;
        stack.push_back(nb);
      }
    }
    report.domain_sizes.push_back(size);
    if (size < kMinDomainPixels) report.resolution_suspect = true;
  }
  return report;
}

NodalReport nodal_report(const EigenfunctionSpec& spec, int resolution) {
  NodalReport report =
      count_domains(sign_grid(eval_grid(spec, GridSpec{resolution, 0.0})), Connectivity::kFour);
  report.spec = spec;
  report.klass = class_index(spec);
  return report;
}

int checkerboard_count(int m, int n) {
  if (m < 1 || n < 1) {
    throw BilliardError(ErrorCode::kInvalidArgument, "checkerboard needs m, n >= 1");
  }
  return m * n;
}

FieldGrid rectangle_field(int m, int n, int resolution) {
  const BoundingBox box{0.0, kPi, 0.0, kPi};
  return sample_field(
      box, GridSpec{resolution, 0.0},
      [](Point p) { return p.x > 0.0 && p.x < kPi && p.y > 0.0 && p.y < kPi; },
      [m, n](Point p) { return std::sin(m * p.x) * std::sin(n * p.y); });
}

GrayImage nodal_render(const FieldGrid& field, RenderMode mode) {
  const int res = field.resolution();
  GrayImage image{res, res, std::vector<std::uint8_t>(field.values.size(), 128)};

  double peak = 0.0;
  if (mode == RenderMode::kAmplitude) {
    for (std::size_t k = 0; k < field.values.size(); ++k) {
      if (field.mask[k]) peak = std::max(peak, std::abs(field.values[k]));
    }
  }

  for (int j = 0; j < res; ++j) {
    const int row = res - 1 - j;
    for (int i = 0; i < res; ++i) {
      const auto src = field.index(i, j);
      if (!field.mask[src]) continue;
      const double v = field.values[src];
      std::uint8_t byte = 128;
      if (mode == RenderMode::kSign) {
        byte = v > 0.0 ? 255 : (v < 0.0 ? 0 : 128);
      } else if (peak > 0.0) {
        const double level = std::clamp((v / peak + 1.0) * 127.5, 0.0, 255.0);
        byte = static_cast<std::uint8_t>(std::lround(level));
      }
      image.pixels[static_cast<std::size_t>(row) * static_cast<std::size_t>(res) +
                   static_cast<std::size_t>(i)] = byte;
    }
  }
  return image;
}

void write_pgm(std::ostream& out, const GrayImage& image) {
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
}

}  // namespace qbilliard
