#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lambdajc/errors.hpp"
#include "lambdajc/model.hpp"

namespace lambdajc {

// Coherent expansion coefficients q_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!)
// for n = 0..n_max, via the stable ratio recurrence q_{n+1} = q_n alpha/sqrt(n+1).
// Throws TruncationError if the dropped tail mass 1 - sum |q_n|^2 exceeds
// trunc_tol; the kept weights are then renormalized to unit norm so that all
// downstream states are exactly normalized at any truncation.
inline std::vector<complexd> coherent_weights(complexd alpha, int n_max,
                                              double trunc_tol = 1e-10) {
    if (n_max < 0) throw ConfigError("n_max must be non-negative");
    std::vector<complexd> q(static_cast<std::size_t>(n_max) + 1);
    q[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n < n_max; ++n)
        q[n + 1] = q[n] * alpha / std::sqrt(static_cast<double>(n + 1));

    double kept = 0.0;
    for (const complexd& v : q) kept += std::norm(v);
    if (1.0 - kept > trunc_tol)
        throw TruncationError("coherent tail mass " + std::to_string(1.0 - kept) +
                              " exceeds tolerance at n_max=" + std::to_string(n_max));

    const double inv = 1.0 / std::sqrt(kept);
    for (complexd& v : q) v *= inv;
    return q;
}

// Initial field weights for both modes.
struct CoherentWeights {
    std::vector<complexd> q1, q2;

    static CoherentWeights from_config(const ModelConfig& cfg) {
        return {coherent_weights(cfg.alpha1, cfg.n_max, cfg.trunc_tol),
                coherent_weights(cfg.alpha2, cfg.n_max, cfg.trunc_tol)};
    }
};

}  // namespace lambdajc
