#include "octant/modular.hpp"

namespace octant {

uint64_t inv_mod(uint64_t a, uint64_t p) {
  // extended Euclid; p prime, 0 < a < p
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

uint64_t pow_mod(uint64_t base, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  base %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

PointSet PointSet::sample(int k, uint64_t seed, int prime_index) {
  PointSet ps;
  int nprimes = static_cast<int>(sizeof(kFingerprintPrimes) / sizeof(kFingerprintPrimes[0]));
  ps.prime = kFingerprintPrimes[prime_index % nprimes];
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(prime_index + 1)));
  std::uniform_int_distribution<uint64_t> dist(2, ps.prime - 2);
  ps.pts.reserve(k);
  for (int i = 0; i < k; ++i) {
    ModPoint pt;
    pt.x = dist(rng);
    pt.y = dist(rng);
    pt.z = dist(rng);
    pt.xi = inv_mod(pt.x, ps.prime);
    pt.yi = inv_mod(pt.y, ps.prime);
    pt.zi = inv_mod(pt.z, ps.prime);
    ps.pts.push_back(pt);
  }
  return ps;
}

}  // namespace octant
