#pragma once

// Dense polynomials over Z/p built on the dispatched kernels.

#include <cstdint>
#include <vector>

namespace lpi::modp {

using Vec = std::vector<std::uint32_t>;

// Primes just below the kernel modulus bound, largest first.
std::uint32_t prime(std::size_t i);

std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p);

void trim(Vec& a);
// a <- a mod b, b nonzero
void rem_inplace(Vec& a, const Vec& b, std::uint32_t p);
// monic gcd; empty when both are zero
Vec gcd(Vec a, Vec b, std::uint32_t p);

} // namespace lpi::modp
