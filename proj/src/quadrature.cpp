#include "kron3d/quadrature.hpp"

#include "kron3d/errors.hpp"

#include <cmath>

namespace kron3d {

GaussHermiteRule gauss_hermite_rule(int n) {
    if (n < 1) {
        throw InvalidArgumentError("gauss_hermite_rule: need at least one node");
    }
    GaussHermiteRule rule;
    rule.nodes.assign(static_cast<size_t>(n), 0.0);
    rule.weights.assign(static_cast<size_t>(n), 0.0);

    constexpr double kEps = 1e-14;
    constexpr int kMaxNewton = 100;
    const double pi_m4 = 0.7511255444649425; // pi^(-1/4)

    // Roots come in +/- pairs; find the positive half by Newton iteration on
    // the normalized recurrence, walking inward from the largest root.
    const int half = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.nodes[1];
        } else {
            z = 2.0 * z - rule.nodes[static_cast<size_t>(i - 2)];
        }
        double pp = 0.0;
        int it = 0;
        for (; it < kMaxNewton; ++it) {
            double p1 = pi_m4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(j / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z_prev = z;
            z = z_prev - p1 / pp;
            if (std::abs(z - z_prev) <= kEps) {
                break;
            }
        }
        if (it >= kMaxNewton) {
            throw NoConvergenceError("gauss_hermite_rule: Newton iteration stalled");
        }
        rule.nodes[static_cast<size_t>(i)] = z;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = -z;
        rule.weights[static_cast<size_t>(i)] = 2.0 / (pp * pp);
        rule.weights[static_cast<size_t>(n - 1 - i)] = rule.weights[static_cast<size_t>(i)];
    }
    return rule;
}

} // namespace kron3d
