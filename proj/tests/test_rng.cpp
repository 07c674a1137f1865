#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron3d/rng.hpp"

#include <cmath>

using namespace kron3d;

TEST_CASE("identical seeds give identical streams") {
    Rng a(123);
    Rng b(123);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("substreams differ from the base stream and from each other") {
    Rng base(5);
    Rng s0 = Rng::substream(5, 0);
    Rng s1 = Rng::substream(5, 1);
    CHECK(base.next_u64() != s0.next_u64());
    CHECK(s0.next_u64() != s1.next_u64());
}

TEST_CASE("uniform stays in [0, 1) and has the right mean") {
    Rng rng(99);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("normal moments") {
    Rng rng(7);
    const int n = 500000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sum2 += x * x;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("complex normal has unit total variance split across components") {
    Rng rng(11);
    const int n = 500000;
    double re2 = 0.0;
    double im2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const Complex z = rng.complex_normal();
        re2 += z.real() * z.real();
        im2 += z.imag() * z.imag();
    }
    CHECK(re2 / n == doctest::Approx(0.5).epsilon(0.02));
    CHECK(im2 / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("isotropic unit vectors are unit norm") {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const ComplexVector v = rng.isotropic_unit_vector(5);
        CHECK(norm2(v) == doctest::Approx(1.0).epsilon(1e-12));
    }
}
