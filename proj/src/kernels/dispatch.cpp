#include <atomic>
#include <cstdlib>
#include <string_view>

#include "coauthor/kernels.hpp"

namespace coauthor::kernels {

#if defined(COAUTHOR_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif
#if defined(COAUTHOR_HAVE_NEON)
const KernelTable& neon_kernels();
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelTable* avx2_table() {
#if defined(COAUTHOR_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernels() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_table() {
#if defined(COAUTHOR_HAVE_NEON)
  // Advanced SIMD is mandatory on aarch64.
  return &neon_kernels();
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* lookup(Isa isa) {
  switch (isa) {
    case Isa::scalar: return &scalar_table();
    case Isa::avx2: return avx2_table();
    case Isa::neon: return neon_table();
  }
  return nullptr;
}

const KernelTable* initial_selection() {
  if (const char* env = std::getenv("COAUTHOR_SIMD")) {
    std::string_view want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == isa_name(isa)) {
        if (const KernelTable* t = lookup(isa)) return t;
      }
    }
  }
  if (const KernelTable* t = avx2_table()) return t;
  if (const KernelTable* t = neon_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& selection() {
  static std::atomic<const KernelTable*> current{initial_selection()};
  return current;
}

}  // namespace

const KernelTable& active() { return *selection().load(std::memory_order_acquire); }

bool force(Isa isa) {
  const KernelTable* t = lookup(isa);
  if (t == nullptr) return false;
  selection().store(t, std::memory_order_release);
  return true;
}

}  // namespace coauthor::kernels
