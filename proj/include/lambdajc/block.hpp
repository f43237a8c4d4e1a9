#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "lambdajc/cubic.hpp"
#include "lambdajc/model.hpp"

namespace lambdajc {

// Kerr block shift V(n1, n2) = chi * [n1 g1^2(n1)] * [n2 g2^2(n2)].
// Total under the n = 0 convention of Nonlinearity.
inline double kerr_shift(int n1, int n2, const ModelConfig& cfg) {
    return cfg.chi * cfg.g1.kerr_factor(n1) * cfg.g2.kerr_factor(n2);
}

struct BlockConstants {
    double VA, VB, VC;        // Kerr shifts of the three block levels
    double kappa1, kappa2;    // effective couplings
    double delta2, delta3;    // detunings
};

// VA = V(n1,n2), VB = V(n1+1,n2), VC = V(n1,n2+1);
// kappa_i = lambda_i sqrt(n_i+1) f_i(n_i+1).
inline BlockConstants block_constants(int n1, int n2, const ModelConfig& cfg) {
    return {kerr_shift(n1, n2, cfg),
            kerr_shift(n1 + 1, n2, cfg),
            kerr_shift(n1, n2 + 1, cfg),
            cfg.lambda1 * cfg.f1.ladder_factor(n1 + 1),
            cfg.lambda2 * cfg.f2.ladder_factor(n2 + 1),
            cfg.delta2(),
            cfg.delta3()};
}

// Exact solution of one Fock block: the dynamics restricted to the invariant
// subspace {|1,n1,n2>, |2,n1+1,n2>, |3,n1,n2+1>}.  mu are the three real
// characteristic frequencies (ascending), b the partial-fraction weights
// that encode the initial condition A(0) = 1, B(0) = C(0) = 0.
struct BlockSolution {
    int n1 = 0, n2 = 0;
    std::array<double, 3> mu{};
    std::array<double, 3> b{};
    double VA = 0, VB = 0, VC = 0;
    double kappa1 = 0, kappa2 = 0;
    double delta2 = 0, delta3 = 0;
    double x1 = 0, x2 = 0, x3 = 0;  // cubic coefficients
    bool regularized = false;       // degenerate roots nudged via x3
};

namespace detail {

inline std::array<double, 3> cubic_coefficients(const BlockConstants& c) {
    const double d32 = c.VC + c.delta3 - c.delta2;
    const double x1 = c.VA + c.VB + c.VC + c.delta3 - 2.0 * c.delta2;
    const double x2 = (c.VA + c.VB - c.delta2) * d32 + c.VB * (c.VA - c.delta2) -
                      c.kappa1 * c.kappa1 - c.kappa2 * c.kappa2;
    const double x3 = c.VB * ((c.VA - c.delta2) * d32 - c.kappa2 * c.kappa2) -
                      c.kappa1 * c.kappa1 * d32;
    return {x1, x2, x3};
}

inline double root_degeneracy_tol(const std::array<double, 3>& mu) {
    const double m = std::max({std::abs(mu[0]), std::abs(mu[1]), std::abs(mu[2])});
    return std::max(1e-8 * m, 1e-12);
}

inline bool roots_degenerate(const std::array<double, 3>& mu) {
    const double tol = root_degeneracy_tol(mu);
    return mu[1] - mu[0] < tol || mu[2] - mu[1] < tol;
}

}  // namespace detail

// b_j = (mu_k + mu_l + VA + VB - delta2) / (mu_jk mu_jl), {j,k,l} = {1,2,3}.
// Requires mutually distinct roots.
inline std::array<double, 3> block_weights(const BlockSolution& sol) {
    if (detail::roots_degenerate(sol.mu))
        throw DegenerateRootsError("coincident cubic roots in block (" +
                                   std::to_string(sol.n1) + "," +
                                   std::to_string(sol.n2) + ")");
    std::array<double, 3> b;
    for (int j = 0; j < 3; ++j) {
        const int k = (j + 1) % 3, l = (j + 2) % 3;
        b[j] = (sol.mu[k] + sol.mu[l] + sol.VA + sol.VB - sol.delta2) /
               ((sol.mu[j] - sol.mu[k]) * (sol.mu[j] - sol.mu[l]));
    }
    return b;
}

// Solves one block.  Degenerate roots (never seen for the figure parameter
// sets) are handled by nudging x3 by 1e-10 * scale and re-solving; the
// solution is flagged `regularized`.
inline BlockSolution solve_block(int n1, int n2, const ModelConfig& cfg) {
    const BlockConstants c = block_constants(n1, n2, cfg);
    const auto [x1, x2, x3] = detail::cubic_coefficients(c);

    BlockSolution sol;
    sol.n1 = n1;
    sol.n2 = n2;
    sol.VA = c.VA;
    sol.VB = c.VB;
    sol.VC = c.VC;
    sol.kappa1 = c.kappa1;
    sol.kappa2 = c.kappa2;
    sol.delta2 = c.delta2;
    sol.delta3 = c.delta3;
    sol.x1 = x1;
    sol.x2 = x2;
    sol.x3 = x3;

    const double scale = std::max({1.0, std::abs(x3), std::abs(x1 * x1 * x1)});
    double nudge = 1e-10 * scale;
    for (int attempt = 0; attempt < 5; ++attempt) {
        sol.mu = cardano_roots(x1, x2, sol.x3);
        if (!detail::roots_degenerate(sol.mu)) {
            sol.b = block_weights(sol);
            return sol;
        }
        sol.x3 = x3 + nudge;
        nudge *= 10.0;
        sol.regularized = true;
    }
    throw DegenerateRootsError("block (" + std::to_string(n1) + "," +
                               std::to_string(n2) +
                               ") still degenerate after regularization");
}

struct BlockAmplitudes {
    complexd A, B, C;
};

// Probability amplitudes of the block at time t:
//   A = -e^{-i d2 t} sum_j (mu_j + VB) b_j e^{i mu_j t}
//   B = kappa1 sum_j b_j e^{i mu_j t}
//   C = e^{i (d3-d2) t} / kappa2 *
//       sum_j [(mu_j+VB)(mu_j+VA-d2) - kappa1^2] b_j e^{i mu_j t}
// |A|^2 + |B|^2 + |C|^2 = 1 for all t.
inline BlockAmplitudes block_amplitudes(const BlockSolution& s, double t) {
    complexd sum_a{}, sum_b{}, sum_c{};
    for (int j = 0; j < 3; ++j) {
        const complexd e = s.b[j] * std::polar(1.0, s.mu[j] * t);
        const double p = s.mu[j] + s.VB;
        sum_a += p * e;
        sum_b += e;
        sum_c += (p * (s.mu[j] + s.VA - s.delta2) - s.kappa1 * s.kappa1) * e;
    }
    BlockAmplitudes amp;
    amp.A = -std::polar(1.0, -s.delta2 * t) * sum_a;
    amp.B = s.kappa1 * sum_b;
    // kappa2 = 0 decouples level |3>: C stays 0 (sum_c ~ kappa2^2 in that limit).
    amp.C = s.kappa2 == 0.0
                ? complexd{}
                : std::polar(1.0, (s.delta3 - s.delta2) * t) / s.kappa2 * sum_c;
    return amp;
}

}  // namespace lambdajc
