#pragma once

// Dense arithmetic kernels shared by the metric modules.
//
// Every kernel has a scalar reference implementation; AVX2 (x86-64) and
// NEON (aarch64) variants are compiled where the target supports them and
// picked at first use. Vector variants may reassociate sums, so results
// agree with the scalar path to rounding, not bit-for-bit. Within one
// process the selection is fixed, so repeated runs are reproducible.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace coauthor::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  double (*sum)(std::span<const double> x);
  double (*dot)(std::span<const double> x, std::span<const double> y);
  // x *= a
  void (*scale)(std::span<double> x, double a);
  // y = a*x + b*y
  void (*axpby)(double a, std::span<const double> x, double b, std::span<double> y);
  // y = base + factor*y
  void (*affine)(std::span<double> y, double base, double factor);
  double (*max_abs_diff)(std::span<const double> x, std::span<const double> y);
  // -infinity for an empty span
  double (*max_value)(std::span<const double> x);
  // y[i] = sum over k in [offsets[i], offsets[i+1]) of values[k] * x[cols[k]]
  void (*gather_rows)(std::span<const std::size_t> offsets, std::span<const std::uint32_t> cols,
                      std::span<const double> values, std::span<const double> x,
                      std::span<double> y);
};

const KernelTable& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// The table used by the library. Chosen once: the best supported ISA,
// unless COAUTHOR_SIMD=scalar|avx2|neon names another supported one.
const KernelTable& active();

// Override the active table (tests, benchmarks). Returns false and leaves
// the selection untouched if `isa` is unavailable.
bool force(Isa isa);

inline double sum(std::span<const double> x) { return active().sum(x); }
inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x, y);
}
inline void scale(std::span<double> x, double a) { active().scale(x, a); }
inline void axpby(double a, std::span<const double> x, double b, std::span<double> y) {
  active().axpby(a, x, b, y);
}
inline void affine(std::span<double> y, double base, double factor) {
  active().affine(y, base, factor);
}
inline double max_abs_diff(std::span<const double> x, std::span<const double> y) {
  return active().max_abs_diff(x, y);
}
inline double max_value(std::span<const double> x) { return active().max_value(x); }
inline void gather_rows(std::span<const std::size_t> offsets, std::span<const std::uint32_t> cols,
                        std::span<const double> values, std::span<const double> x,
                        std::span<double> y) {
  active().gather_rows(offsets, cols, values, x, y);
}

}  // namespace coauthor::kernels
