// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "coauthor/kernels.hpp"

namespace coauthor::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, sh));
}

double sum_avx2(std::span<const double> x) {
  const double* p = x.data();
  const std::size_t n = x.size();
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_add_pd(a0, _mm256_loadu_pd(p + i));
    a1 = _mm256_add_pd(a1, _mm256_loadu_pd(p + i + 4));
  }
  for (; i + 4 <= n; i += 4) a0 = _mm256_add_pd(a0, _mm256_loadu_pd(p + i));
  double s = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) s += p[i];
  return s;
}

double dot_avx2(std::span<const double> x, std::span<const double> y) {
  const double* px = x.data();
  const double* py = y.data();
  const std::size_t n = x.size();
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i)));
    a1 = _mm256_add_pd(a1,
                       _mm256_mul_pd(_mm256_loadu_pd(px + i + 4), _mm256_loadu_pd(py + i + 4)));
  }
  for (; i + 4 <= n; i += 4)
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i)));
  double s = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) s += px[i] * py[i];
  return s;
}

void scale_avx2(std::span<double> x, double a) {
  double* p = x.data();
  const std::size_t n = x.size();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), va));
  for (; i < n; ++i) p[i] *= a;
}

void axpby_avx2(double a, std::span<const double> x, double b, std::span<double> y) {
  const double* px = x.data();
  double* py = y.data();
  const std::size_t n = y.size();
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(px + i)),
                              _mm256_mul_pd(vb, _mm256_loadu_pd(py + i)));
    _mm256_storeu_pd(py + i, r);
  }
  for (; i < n; ++i) py[i] = a * px[i] + b * py[i];
}

void affine_avx2(std::span<double> y, double base, double factor) {
  double* p = y.data();
  const std::size_t n = y.size();
  const __m256d vbase = _mm256_set1_pd(base);
  const __m256d vfac = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(p + i, _mm256_add_pd(vbase, _mm256_mul_pd(vfac, _mm256_loadu_pd(p + i))));
  for (; i < n; ++i) p[i] = base + factor * p[i];
}

double max_abs_diff_avx2(std::span<const double> x, std::span<const double> y) {
  const double* px = x.data();
  const double* py = y.data();
  const std::size_t n = x.size();
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i));
    m = _mm256_max_pd(m, _mm256_andnot_pd(sign, d));
  }
  double r = hmax(m);
  for (; i < n; ++i) r = std::max(r, std::abs(px[i] - py[i]));
  return r;
}

double max_value_avx2(std::span<const double> x) {
  const double* p = x.data();
  const std::size_t n = x.size();
  __m256d m = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, _mm256_loadu_pd(p + i));
  double r = hmax(m);
  for (; i < n; ++i) r = std::max(r, p[i]);
  return r;
}

void gather_rows_avx2(std::span<const std::size_t> offsets, std::span<const std::uint32_t> cols,
                      std::span<const double> values, std::span<const double> x,
                      std::span<double> y) {
  const double* px = x.data();
  const double* pv = values.data();
  const std::uint32_t* pc = cols.data();
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::size_t k = offsets[i];
    const std::size_t end = offsets[i + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= end; k += 4) {
      __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(pc + k));
      __m256d xv = _mm256_i32gather_pd(px, idx, 8);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(pv + k), xv));
    }
    double s = hsum(acc);
    for (; k < end; ++k) s += pv[k] * px[pc[k]];
    y[i] = s;
  }
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{
      Isa::avx2,   sum_avx2,          dot_avx2,       scale_avx2,      axpby_avx2,
      affine_avx2, max_abs_diff_avx2, max_value_avx2, gather_rows_avx2,
  };
  return table;
}

}  // namespace coauthor::kernels
