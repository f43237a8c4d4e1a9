#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lambdajc/errors.hpp"
#include "lambdajc/observables.hpp"
#include "lambdajc/state.hpp"

namespace lambdajc {

// Two-mode Pegg-Barnett phase distribution sampled on a uniform mesh
// theta_i = theta0 + 2 pi i / m_pts.  In the s -> infinity limit,
//   P(th1, th2) = (1/4pi^2) sum_k | sum_{m1,m2} psi_k(m1,m2)
//                                  e^{-i m1 th1} e^{-i m2 th2} |^2,
// a trigonometric polynomial of degree <= n_max+1 per axis, so the periodic
// rectangle rule integrates it exactly once m_pts exceeds Nyquist.
struct PhaseGrid {
    double theta0 = -std::numbers::pi;
    int m_pts = 0;
    std::vector<double> values;  // row-major, index i1*m_pts + i2

    double cell_weight() const {
        const double h = 2.0 * std::numbers::pi / m_pts;
        return h * h;
    }

    double integral() const {
        double s = 0.0;
        for (const double v : values) s += v;
        return s * cell_weight();
    }
};

inline PhaseGrid phase_distribution(const JointState& s, double theta0,
                                    int m_pts) {
    const int d = s.dim;
    if (m_pts < 2 * (d - 1))
        throw ResolutionError("m_pts below the Nyquist bound 2*(n_max+1)");

    // Fourier kernel K[m][i] = e^{-i m theta_i}, shared by both axes.
    std::vector<complexd> kernel(static_cast<std::size_t>(d) * m_pts);
    for (int m = 0; m < d; ++m)
        for (int i = 0; i < m_pts; ++i)
            kernel[static_cast<std::size_t>(m) * m_pts + i] =
                std::polar(1.0, -m * (theta0 + 2.0 * std::numbers::pi * i / m_pts));

    PhaseGrid grid;
    grid.theta0 = theta0;
    grid.m_pts = m_pts;
    grid.values.assign(static_cast<std::size_t>(m_pts) * m_pts, 0.0);

    // Separable contraction per branch: first over m2, then over m1.
    std::vector<complexd> partial(static_cast<std::size_t>(d) * m_pts);
    std::vector<complexd> full(static_cast<std::size_t>(m_pts) * m_pts);
    for (int k = 0; k < 3; ++k) {
        const auto& p = s.branch(k);
        std::fill(partial.begin(), partial.end(), complexd{});
        for (int m1 = 0; m1 < d; ++m1) {
            for (int m2 = 0; m2 < d; ++m2) {
                const complexd v = p[s.idx(m1, m2)];
                if (v == complexd{}) continue;
                const complexd* krow = &kernel[static_cast<std::size_t>(m2) * m_pts];
                complexd* out = &partial[static_cast<std::size_t>(m1) * m_pts];
                for (int i2 = 0; i2 < m_pts; ++i2) out[i2] += v * krow[i2];
            }
        }
        std::fill(full.begin(), full.end(), complexd{});
        for (int i1 = 0; i1 < m_pts; ++i1) {
            complexd* frow = &full[static_cast<std::size_t>(i1) * m_pts];
            for (int m1 = 0; m1 < d; ++m1) {
                const complexd kv = kernel[static_cast<std::size_t>(m1) * m_pts + i1];
                const complexd* prow = &partial[static_cast<std::size_t>(m1) * m_pts];
                for (int i2 = 0; i2 < m_pts; ++i2) frow[i2] += kv * prow[i2];
            }
        }
        const double inv4pi2 = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
        for (std::size_t i = 0; i < full.size(); ++i)
            grid.values[i] += inv4pi2 * std::norm(full[i]);
    }
    return grid;
}

// Shannon entropies of the number and phase distributions, with the
// squeezing indicators S = exp(R)/sqrt(2 pi) - 1 (squeezed iff -1 < S < 0).
// Zero bins contribute zero (x ln x -> 0).
struct EntropyRecord {
    double r_n = 0, r_theta = 0;  // nats
    double s_n = 0, s_theta = 0;
};

namespace detail {
inline double neg_xlogx_sum(const std::vector<double>& p, double weight) {
    double s = 0.0;
    for (const double v : p)
        if (v > 1e-300) s -= v * std::log(v);
    return s * weight;
}
}  // namespace detail

inline EntropyRecord entropies(const JointState& state, const PhaseGrid& grid) {
    EntropyRecord rec;
    rec.r_n = detail::neg_xlogx_sum(number_distribution(state), 1.0);
    rec.r_theta = detail::neg_xlogx_sum(grid.values, grid.cell_weight());
    const double inv_sqrt2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    rec.s_n = std::exp(rec.r_n) * inv_sqrt2pi - 1.0;
    rec.s_theta = std::exp(rec.r_theta) * inv_sqrt2pi - 1.0;
    return rec;
}

}  // namespace lambdajc
