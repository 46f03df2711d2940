#include <arm_neon.h>

#include <cmath>
#include <limits>

#include "coauthor/kernels.hpp"

namespace coauthor::kernels {
namespace {

double sum_neon(std::span<const double> x) {
  const double* p = x.data();
  const std::size_t n = x.size();
  float64x2_t a0 = vdupq_n_f64(0.0);
  float64x2_t a1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a0 = vaddq_f64(a0, vld1q_f64(p + i));
    a1 = vaddq_f64(a1, vld1q_f64(p + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(a0, a1));
  for (; i < n; ++i) s += p[i];
  return s;
}

double dot_neon(std::span<const double> x, std::span<const double> y) {
  const double* px = x.data();
  const double* py = y.data();
  const std::size_t n = x.size();
  float64x2_t a0 = vdupq_n_f64(0.0);
  float64x2_t a1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a0 = vaddq_f64(a0, vmulq_f64(vld1q_f64(px + i), vld1q_f64(py + i)));
    a1 = vaddq_f64(a1, vmulq_f64(vld1q_f64(px + i + 2), vld1q_f64(py + i + 2)));
  }
  double s = vaddvq_f64(vaddq_f64(a0, a1));
  for (; i < n; ++i) s += px[i] * py[i];
  return s;
}

void scale_neon(std::span<double> x, double a) {
  double* p = x.data();
  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(p + i, vmulq_n_f64(vld1q_f64(p + i), a));
  for (; i < n; ++i) p[i] *= a;
}

void axpby_neon(double a, std::span<const double> x, double b, std::span<double> y) {
  const double* px = x.data();
  double* py = y.data();
  const std::size_t n = y.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t r = vaddq_f64(vmulq_n_f64(vld1q_f64(px + i), a), vmulq_n_f64(vld1q_f64(py + i), b));
    vst1q_f64(py + i, r);
  }
  for (; i < n; ++i) py[i] = a * px[i] + b * py[i];
}

void affine_neon(std::span<double> y, double base, double factor) {
  double* p = y.data();
  const std::size_t n = y.size();
  const float64x2_t vbase = vdupq_n_f64(base);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(p + i, vaddq_f64(vbase, vmulq_n_f64(vld1q_f64(p + i), factor)));
  for (; i < n; ++i) p[i] = base + factor * p[i];
}

double max_abs_diff_neon(std::span<const double> x, std::span<const double> y) {
  const double* px = x.data();
  const double* py = y.data();
  const std::size_t n = x.size();
  float64x2_t m = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) m = vmaxq_f64(m, vabdq_f64(vld1q_f64(px + i), vld1q_f64(py + i)));
  double r = vmaxvq_f64(m);
  for (; i < n; ++i) r = std::max(r, std::abs(px[i] - py[i]));
  return r;
}

double max_value_neon(std::span<const double> x) {
  const double* p = x.data();
  const std::size_t n = x.size();
  float64x2_t m = vdupq_n_f64(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) m = vmaxq_f64(m, vld1q_f64(p + i));
  double r = vmaxvq_f64(m);
  for (; i < n; ++i) r = std::max(r, p[i]);
  return r;
}

// No gather on NEON; two interleaved accumulators still shorten the add chain.
void gather_rows_neon(std::span<const std::size_t> offsets, std::span<const std::uint32_t> cols,
                      std::span<const double> values, std::span<const double> x,
                      std::span<double> y) {
  const double* px = x.data();
  const double* pv = values.data();
  const std::uint32_t* pc = cols.data();
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::size_t k = offsets[i];
    const std::size_t end = offsets[i + 1];
    float64x2_t acc = vdupq_n_f64(0.0);
    for (; k + 2 <= end; k += 2) {
      float64x2_t xv = vsetq_lane_f64(px[pc[k + 1]], vdupq_n_f64(px[pc[k]]), 1);
      acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(pv + k), xv));
    }
    double s = vaddvq_f64(acc);
    for (; k < end; ++k) s += pv[k] * px[pc[k]];
    y[i] = s;
  }
}

}  // namespace

const KernelTable& neon_kernels() {
  static const KernelTable table{
      Isa::neon,   sum_neon,          dot_neon,       scale_neon,      axpby_neon,
      affine_neon, max_abs_diff_neon, max_value_neon, gather_rows_neon,
  };
  return table;
}

}  // namespace coauthor::kernels
