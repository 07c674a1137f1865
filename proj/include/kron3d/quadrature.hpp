#ifndef KRON3D_QUADRATURE_HPP
#define KRON3D_QUADRATURE_HPP

#include <vector>

namespace kron3d {

struct GaussHermiteRule {
    std::vector<double> nodes;   // roots of the physicists' Hermite polynomial
    std::vector<double> weights; // sum to sqrt(pi)
};

// n-point Gauss-Hermite rule for integrals against exp(-x^2).
// For X ~ N(mean, sd^2): E[f(X)] = sum_i w_i/sqrt(pi) * f(mean + sqrt(2)*sd*x_i).
GaussHermiteRule gauss_hermite_rule(int n);

} // namespace kron3d

#endif
