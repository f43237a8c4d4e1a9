#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lambdajc/lambdajc.hpp"

namespace test_helpers {

using lambdajc::complexd;

// Resonant config with unit nonlinearities; the workhorse for small tests.
inline lambdajc::ModelConfig resonant_unit(int n_max, double alpha) {
    lambdajc::ModelConfig cfg;
    cfg.n_max = n_max;
    cfg.alpha1 = cfg.alpha2 = alpha;
    cfg.trunc_tol = 1e-4;
    return cfg;
}

inline lambdajc::ModelConfig resonant_harmonious(int n_max, double alpha) {
    auto cfg = resonant_unit(n_max, alpha);
    cfg.f1 = cfg.f2 = lambdajc::Nonlinearity::harmonious();
    return cfg;
}

// Fock-state weights |n> as a weight vector of length n_max+1.
inline std::vector<complexd> fock_weights(int n, int n_max) {
    std::vector<complexd> q(static_cast<std::size_t>(n_max) + 1, complexd{});
    q[static_cast<std::size_t>(n)] = 1.0;
    return q;
}

}  // namespace test_helpers
