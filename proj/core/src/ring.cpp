#include "spwb/ring.hpp"

namespace spwb {

bool is_prime64(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::make_local_ring(std::int64_t p, std::int64_t k) {
  if (!is_prime64(p)) fail(Err::NotPrime, "p = " + std::to_string(p));
  if (k < 1) fail(Err::ConfigError, "k must be >= 1");
  // Keep modulus^2 within int64 so mul() never overflows.
  constexpr std::int64_t kMaxModulus = std::int64_t(1) << 31;
  std::int64_t m = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (m > kMaxModulus / p) fail(Err::CapExceeded, "modulus too large");
    m *= p;
  }
  return Ring(p, k, m);
}

Elem Ring::pow(Elem a, std::int64_t e) const {
  if (e < 0) fail(Err::Internal, "negative exponent");
  Elem base = reduce(a), acc = reduce(1);
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Elem Ring::unit_inverse(Elem a) const {
  Elem c = reduce(a);
  if (!is_unit(c)) fail(Err::NotAUnit, std::to_string(c) + " in " + to_string());
  // Extended Euclid on (c, modulus).
  std::int64_t r0 = c, r1 = modulus_, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) fail(Err::NotAUnit, std::to_string(c));
  return reduce(s0);
}

std::vector<Elem> Ring::elements() const {
  std::vector<Elem> out(static_cast<std::size_t>(modulus_));
  for (std::int64_t i = 0; i < modulus_; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

std::vector<Elem> Ring::units() const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(modulus_ - modulus_ / p_));
  for (std::int64_t i = 1; i < modulus_; ++i)
    if (i % p_ != 0) out.push_back(i);
  return out;
}

std::string Ring::to_string() const {
  if (k_ == 1) return "F" + std::to_string(p_);
  return "Z/" + std::to_string(modulus_);
}

}  // namespace spwb
