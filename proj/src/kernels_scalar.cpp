#include "lpi/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "lpi/errors.hpp"

namespace lpi::kernels {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src,
                     std::size_t n, std::uint32_t c, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + cc * src[i]) % p);
}

void scale_mod_scalar(std::uint32_t* v, std::size_t n, std::uint32_t c,
                      std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<std::uint32_t>((cc * v[i]) % p);
}

const KernelSet& scalar_kernels() {
  static const KernelSet k{"scalar", &axpy_mod_scalar, &scale_mod_scalar};
  return k;
}

const KernelSet* avx2_kernels() {
#if defined(LPI_HAVE_AVX2_KERNELS)
  static const KernelSet k{"avx2", &axpy_mod_avx2, &scale_mod_avx2};
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return ok ? &k : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelSet* pick_auto() {
  const char* env = std::getenv("LPI_SIMD");
  if (env && std::string(env) == "scalar") return &scalar_kernels();
  if (const KernelSet* k = avx2_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<const KernelSet*> g_active{nullptr};

} // namespace

const KernelSet& active() {
  const KernelSet* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = pick_auto();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

void select(const std::string& which) {
  if (which == "scalar") {
    g_active.store(&scalar_kernels());
  } else if (which == "avx2") {
    const KernelSet* k = avx2_kernels();
    if (!k) throw InvalidArgument("avx2 kernels unavailable on this machine");
    g_active.store(k);
  } else if (which == "auto") {
    g_active.store(pick_auto());
  } else {
    throw InvalidArgument("unknown kernel set '" + which + "'");
  }
}

} // namespace lpi::kernels
