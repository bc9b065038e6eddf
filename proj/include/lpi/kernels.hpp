#pragma once

// Word-sized modular vector kernels used by the modular gcd.
// Every variant must produce bit-identical output to the scalar one.

#include <cstddef>
#include <cstdint>
#include <string>

namespace lpi::kernels {

// Moduli handled by the kernels are odd primes below this bound, so that
// c*b + a stays exactly representable in a double.
constexpr std::uint32_t kMaxModulus = 1u << 26;

// dst[i] = (dst[i] + c * src[i]) mod p, operands reduced, c < p.
using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src,
                        std::size_t n, std::uint32_t c, std::uint32_t p);
// v[i] = (c * v[i]) mod p
using ScaleFn = void (*)(std::uint32_t* v, std::size_t n, std::uint32_t c,
                         std::uint32_t p);

struct KernelSet {
  const char* name;
  AxpyFn axpy;
  ScaleFn scale;
};

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src,
                     std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_mod_scalar(std::uint32_t* v, std::size_t n, std::uint32_t c,
                      std::uint32_t p);

#if defined(LPI_HAVE_AVX2_KERNELS)
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                   std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_mod_avx2(std::uint32_t* v, std::size_t n, std::uint32_t c,
                    std::uint32_t p);
#endif

const KernelSet& scalar_kernels();
// nullptr when the build or the running CPU lacks the instruction set
const KernelSet* avx2_kernels();

// Selected on first use: AVX2 when available, unless LPI_SIMD=scalar.
const KernelSet& active();
// Override for tests and benchmarks; accepts "scalar", "avx2" or "auto".
void select(const std::string& which);

} // namespace lpi::kernels
