#ifndef KRON3D_RNG_HPP
#define KRON3D_RNG_HPP

#include "kron3d/linalg.hpp"

#include <cstdint>

namespace kron3d {

// 64-bit finalizer used for substream derivation (splitmix64 mixer).
uint64_t mix64(uint64_t x);

// Counter-based generator (splitmix64). Every draw advances a single 64-bit
// counter, so streams derived from distinct seeds never share state and
// per-trial substreams are reproducible regardless of scheduling.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    // Substream for an independent work item (trial, restart, ...);
    // derived as seed XOR hash(index).
    static Rng substream(uint64_t seed, uint64_t index);

    uint64_t next_u64();

    // Uniform on [0, 1).
    double uniform();
    // Uniform on (0, 1]; safe as a logarithm argument.
    double uniform_positive();

    // Standard normal via Box-Muller.
    double normal();

    // CN(0,1): unit total variance, i.e. variance 1/2 per real component.
    Complex complex_normal();

    ComplexVector complex_normal_vector(size_t n);

    // Haar-uniform point on the complex unit sphere.
    ComplexVector isotropic_unit_vector(size_t n);

  private:
    uint64_t state_;
};

} // namespace kron3d

#endif
