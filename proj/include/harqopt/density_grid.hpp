#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "harqopt/errors.hpp"

namespace harqopt {

/// Uniform discretization of a density or CDF-like function on [0, t].
struct DensityGrid {
  enum class Kind { Pdf, CdfLike };

  std::vector<double> values;  // grid_points + 1 samples
  double step = 0.0;
  Kind kind = Kind::Pdf;

  std::size_t cells() const { return values.empty() ? 0 : values.size() - 1; }
  double domain() const { return step * static_cast<double>(cells()); }
  double back() const { return values.back(); }

  /// Linear interpolation; clamps to the domain ends.
  double interpolate(double x) const {
    if (x <= 0.0) return values.front();
    const double pos = x / step;
    const auto idx = static_cast<std::size_t>(pos);
    if (idx >= cells()) return values.back();
    const double frac = pos - static_cast<double>(idx);
    return values[idx] + (values[idx + 1] - values[idx]) * frac;
  }
};

/// Trapezoid-rule convolution of two sampled functions, truncated to the
/// shared domain [0, t]. The truncation is exact for evaluating chains at t
/// because the convolution integrand is supported on the simplex.
inline DensityGrid convolve_pdf(const DensityGrid& a, const DensityGrid& b) {
  if (a.values.size() != b.values.size() || a.step != b.step)
    throw ValidationError("convolve_pdf: grids must share step and size");
  const std::size_t n = a.cells();
  DensityGrid out;
  out.step = a.step;
  out.kind = a.kind;
  out.values.assign(n + 1, 0.0);
  for (std::size_t j = 1; j <= n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= j; ++i) acc += a.values[i] * b.values[j - i];
    acc -= 0.5 * (a.values[0] * b.values[j] + a.values[j] * b.values[0]);
    out.values[j] = acc * a.step;
  }
  return out;
}

}  // namespace harqopt
