#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spwb/error.hpp"

namespace spwb {

// Element of a finite local ring, stored as the canonical residue in
// [0, modulus).
using Elem = std::int64_t;

// Finite local ring Z/p^k with residue field F_p; k = 1 gives the prime
// field itself. Units are exactly the residues not divisible by p.
class Ring {
 public:
  enum class Kind { PrimeField, Zmod };

  // Validates that p is prime (NotPrime) and k >= 1; the modulus must fit
  // comfortably in 64-bit arithmetic (CapExceeded).
  static Ring make_local_ring(std::int64_t p, std::int64_t k);
  static Ring prime_field(std::int64_t p) { return make_local_ring(p, 1); }

  Kind kind() const { return k_ == 1 ? Kind::PrimeField : Kind::Zmod; }
  std::int64_t p() const { return p_; }
  std::int64_t k() const { return k_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t size() const { return modulus_; }

  Elem reduce(std::int64_t x) const {
    Elem r = x % modulus_;
    return r < 0 ? r + modulus_ : r;
  }
  Elem add(Elem a, Elem b) const { return reduce(a + b); }
  Elem sub(Elem a, Elem b) const { return reduce(a - b); }
  Elem neg(Elem a) const { return reduce(-a); }
  Elem mul(Elem a, Elem b) const { return reduce(a * b); }
  Elem pow(Elem a, std::int64_t e) const;

  bool is_unit(Elem a) const { return reduce(a) % p_ != 0; }
  // Inverse of a unit; throws NotAUnit otherwise.
  Elem unit_inverse(Elem a) const;

  // Image in the residue field Z/p.
  Elem residue(Elem a) const { return reduce(a) % p_; }
  Ring residue_field() const { return make_local_ring(p_, 1); }

  std::vector<Elem> elements() const;
  std::vector<Elem> units() const;

  std::string to_string() const;

  bool operator==(const Ring& o) const = default;

 private:
  Ring(std::int64_t p, std::int64_t k, std::int64_t modulus)
      : p_(p), k_(k), modulus_(modulus) {}
  std::int64_t p_, k_, modulus_;
};

bool is_prime64(std::int64_t n);

}  // namespace spwb
