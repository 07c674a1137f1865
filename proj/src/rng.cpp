#include "kron3d/rng.hpp"

#include <cmath>
#include <numbers>

namespace kron3d {

uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

Rng Rng::substream(uint64_t seed, uint64_t index) {
    // Offset before hashing so index 0 does not map to hash(0) == 0.
    return Rng(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_positive() {
    return 1.0 - uniform();
}

double Rng::normal() {
    const double r = std::sqrt(-2.0 * std::log(uniform_positive()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    return r * std::cos(phi);
}

Complex Rng::complex_normal() {
    // One Box-Muller pair feeds both components; total variance is 1.
    const double r = std::sqrt(-std::log(uniform_positive()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    return Complex(r * std::cos(phi), r * std::sin(phi));
}

ComplexVector Rng::complex_normal_vector(size_t n) {
    ComplexVector v(n);
    for (Complex &z : v) {
        z = complex_normal();
    }
    return v;
}

ComplexVector Rng::isotropic_unit_vector(size_t n) {
    ComplexVector v = complex_normal_vector(n);
    normalize(v);
    return v;
}

} // namespace kron3d
