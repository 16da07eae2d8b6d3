// Seeded, implementation-independent randomness for the property checks.
//
// The generator is SplitMix64 (Steele/Lea/Flood finalizer, the same constants
// used by java.util.SplittableRandom). Gaussians come from Box-Muller on the
// top 53 bits. Nothing here depends on libstdc++ distribution internals, so a
// given seed produces the same states on every platform.
#pragma once

#include <cstdint>

#include "qfanout/matrix.hpp"

namespace qfanout {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; the pair's second value is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0,1] so the log is finite.
    const double u1 =
        (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Haar-uniform pure state: one complex Gaussian per amplitude (re then im),
// then normalize. Draw order is amplitude 0, 1, ... so streams are stable.
inline StateVector random_state(std::size_t dim, SplitMix64& rng) {
  StateVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    v[i] = cxd{re, im};
  }
  return normalized(v);
}

inline StateVector random_state(std::size_t dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_state(dim, rng);
}

// Haar-ish unitary: complex Gaussian matrix, modified Gram-Schmidt on the
// columns with one re-orthogonalization pass.
inline ComplexMatrix random_unitary(std::size_t dim, SplitMix64& rng) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = cxd{rng.gaussian(), rng.gaussian()};

  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        cxd proj{0.0, 0.0};
        for (std::size_t i = 0; i < dim; ++i)
          proj += std::conj(m(i, k)) * m(i, j);
        for (std::size_t i = 0; i < dim; ++i) m(i, j) -= proj * m(i, k);
      }
      double nrm = 0.0;
      for (std::size_t i = 0; i < dim; ++i) nrm += std::norm(m(i, j));
      nrm = std::sqrt(nrm);
      for (std::size_t i = 0; i < dim; ++i) m(i, j) /= nrm;
    }
  }
  return m;
}

inline ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_unitary(dim, rng);
}

}  // namespace qfanout
