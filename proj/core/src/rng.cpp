#include "spwb/rng.hpp"

#include "spwb/error.hpp"

namespace spwb {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(Err::Internal, "Rng::below(0)");
  std::uint64_t x, r;
  do {
    x = next();
    r = x % n;
  } while (x - r > UINT64_MAX - (n - 1));
  return r;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) fail(Err::Internal, "Rng::range order");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
  r.next();
  return r;
}

}  // namespace spwb
