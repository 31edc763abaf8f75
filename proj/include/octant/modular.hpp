#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace octant {

// Word-size primes just below 2^62 used for fingerprint evaluation.
// A point is resampled (and eventually the prime rotated) whenever a
// denominator vanishes during evaluation.
inline constexpr uint64_t kFingerprintPrimes[] = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
};

struct DenominatorVanishes : std::runtime_error {
  DenominatorVanishes() : std::runtime_error("denominator vanishes at evaluation point") {}
};

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;  // < 2^63, no overflow for p < 2^62
  return s >= p ? s - p : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

uint64_t inv_mod(uint64_t a, uint64_t p);  // a != 0 mod p

uint64_t pow_mod(uint64_t base, uint64_t e, uint64_t p);

// One evaluation point (x,y,z) mod p with cached inverses.
struct ModPoint {
  uint64_t x, y, z;
  uint64_t xi, yi, zi;

  bool operator==(const ModPoint& o) const { return x == o.x && y == o.y && z == o.z; }
};

// A fixed tuple of evaluation points sharing one prime. Deterministic for a
// given seed; used both for element fingerprints and for probabilistic
// rational-function equality.
struct PointSet {
  uint64_t prime;
  std::vector<ModPoint> pts;

  static PointSet sample(int k, uint64_t seed, int prime_index = 0);
};

}  // namespace octant
