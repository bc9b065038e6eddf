#include "modp.hpp"

#include <gmpxx.h>

#include <mutex>

#include "lpi/kernels.hpp"

namespace lpi::modp {

std::uint32_t prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<std::uint32_t> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= i) {
    std::uint32_t c = cache.empty() ? kernels::kMaxModulus - 1 : cache.back() - 2;
    if (c % 2 == 0) --c;
    mpz_class z;
    for (;; c -= 2) {
      z = c;
      if (mpz_probab_prime_p(z.get_mpz_t(), 30)) break;
    }
    cache.push_back(c);
  }
  return cache[i];
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    std::int64_t qt = r / nr;
    std::int64_t tmp = t - qt * nt;
    t = nt;
    nt = tmp;
    tmp = r - qt * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void rem_inplace(Vec& a, const Vec& b, std::uint32_t p) {
  const auto& k = kernels::active();
  const std::size_t db = b.size() - 1;
  const std::uint32_t linv = inv(b.back(), p);
  trim(a);
  while (a.size() > db) {
    std::size_t top = a.size() - 1;
    std::uint32_t c = mulmod(a[top], linv, p);
    if (c) k.axpy(a.data() + (top - db), b.data(), db + 1, p - c, p);
    a[top] = 0;
    trim(a);
  }
}

Vec gcd(Vec a, Vec b, std::uint32_t p) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    rem_inplace(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) kernels::active().scale(a.data(), a.size(), inv(a.back(), p), p);
  return a;
}

} // namespace lpi::modp
