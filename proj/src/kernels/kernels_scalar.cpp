#include "coauthor/kernels.hpp"

#include <cmath>
#include <limits>

namespace coauthor::kernels {
namespace {

double sum_scalar(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

double dot_scalar(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void scale_scalar(std::span<double> x, double a) {
  for (double& v : x) v *= a;
}

void axpby_scalar(double a, std::span<const double> x, double b, std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = a * x[i] + b * y[i];
}

void affine_scalar(std::span<double> y, double base, double factor) {
  for (double& v : y) v = base + factor * v;
}

double max_abs_diff_scalar(std::span<const double> x, std::span<const double> y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double max_value_scalar(std::span<const double> x) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : x) m = std::max(m, v);
  return m;
}

void gather_rows_scalar(std::span<const std::size_t> offsets, std::span<const std::uint32_t> cols,
                        std::span<const double> values, std::span<const double> x,
                        std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    double s = 0.0;
    for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) s += values[k] * x[cols[k]];
    y[i] = s;
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      Isa::scalar,   sum_scalar,          dot_scalar,       scale_scalar,      axpby_scalar,
      affine_scalar, max_abs_diff_scalar, max_value_scalar, gather_rows_scalar,
  };
  return table;
}

}  // namespace coauthor::kernels
