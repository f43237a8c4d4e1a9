#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lambdajc/block.hpp"
#include "lambdajc/coherent.hpp"
#include "lambdajc/model.hpp"

namespace lambdajc {

// Joint atom-field state in the three-branch decomposition
//   |psi> = sum_{m1,m2} [ psi1(m1,m2)|1,m1,m2> + psi2(m1,m2)|2,m1,m2>
//                        + psi3(m1,m2)|3,m1,m2> ].
// Grids run over m1, m2 in [0, n_max+1]; branches 2 and 3 shift one index up,
// so psi2 vanishes on m1 = 0 and psi3 on m2 = 0.  Free-evolution phases
// e^{-i gamma_k t} are included when the config says so.
struct JointState {
    int dim = 0;  // n_max + 2
    double t = 0.0;
    std::vector<complexd> psi1, psi2, psi3;  // row-major, index m1*dim + m2

    static JointState zero(int n_max, double t = 0.0) {
        JointState s;
        s.dim = n_max + 2;
        s.t = t;
        const std::size_t n = static_cast<std::size_t>(s.dim) * s.dim;
        s.psi1.assign(n, complexd{});
        s.psi2.assign(n, complexd{});
        s.psi3.assign(n, complexd{});
        return s;
    }

    std::size_t idx(int m1, int m2) const {
        return static_cast<std::size_t>(m1) * dim + m2;
    }

    const std::vector<complexd>& branch(int k) const {
        return k == 0 ? psi1 : (k == 1 ? psi2 : psi3);
    }

    double norm_sq() const {
        double s = 0.0;
        for (const auto* g : {&psi1, &psi2, &psi3})
            for (const complexd& v : *g) s += std::norm(v);
        return s;
    }
};

// Precomputed block solutions for every (n1, n2) in [0, n_max]^2.
// Immutable after build; shared read-only across time samples.
struct BlockTable {
    int n_max = 0;
    std::vector<BlockSolution> blocks;

    static BlockTable build(const ModelConfig& cfg) {
        cfg.validate();
        BlockTable t;
        t.n_max = cfg.n_max;
        t.blocks.reserve(static_cast<std::size_t>(cfg.n_max + 1) * (cfg.n_max + 1));
        for (int n1 = 0; n1 <= cfg.n_max; ++n1)
            for (int n2 = 0; n2 <= cfg.n_max; ++n2)
                t.blocks.push_back(solve_block(n1, n2, cfg));
        return t;
    }

    const BlockSolution& at(int n1, int n2) const {
        return blocks[static_cast<std::size_t>(n1) * (n_max + 1) + n2];
    }

    int regularized_count() const {
        int c = 0;
        for (const auto& b : blocks) c += b.regularized ? 1 : 0;
        return c;
    }
};

// Assembles the full truncated state at time t:
//   psi1(n1,  n2  ) = q_{n1} q_{n2} A(n1,n2,t)   e^{-i gamma1 t}
//   psi2(n1+1,n2  ) = q_{n1} q_{n2} B(n1+1,n2,t) e^{-i gamma2 t}
//   psi3(n1,  n2+1) = q_{n1} q_{n2} C(n1,n2+1,t) e^{-i gamma3 t}
// with gamma1 = omega1 + n1 Omega1 + n2 Omega2 and gamma2/gamma3 evaluated at
// the shifted occupation of their branch.
inline JointState assemble_state(const ModelConfig& cfg, const BlockTable& table,
                                 const CoherentWeights& w, double t) {
    if (table.n_max != cfg.n_max)
        throw DimensionError("block table truncation does not match config");
    JointState s = JointState::zero(cfg.n_max, t);
    for (int n1 = 0; n1 <= cfg.n_max; ++n1) {
        for (int n2 = 0; n2 <= cfg.n_max; ++n2) {
            const BlockAmplitudes amp = block_amplitudes(table.at(n1, n2), t);
            const complexd qq = w.q1[n1] * w.q2[n2];
            complexd ph1{1.0}, ph2{1.0}, ph3{1.0};
            if (cfg.include_free_phases) {
                const double base = n1 * cfg.Omega1 + n2 * cfg.Omega2;
                ph1 = std::polar(1.0, -(cfg.omega1 + base) * t);
                ph2 = std::polar(1.0, -(cfg.omega2 + base + cfg.Omega1) * t);
                ph3 = std::polar(1.0, -(cfg.omega3 + base + cfg.Omega2) * t);
            }
            s.psi1[s.idx(n1, n2)] = qq * amp.A * ph1;
            s.psi2[s.idx(n1 + 1, n2)] = qq * amp.B * ph2;
            s.psi3[s.idx(n1, n2 + 1)] = qq * amp.C * ph3;
        }
    }
    return s;
}

// One-shot convenience; prefer the overload above when sweeping many times.
inline JointState assemble_state(const ModelConfig& cfg, double t) {
    return assemble_state(cfg, BlockTable::build(cfg), CoherentWeights::from_config(cfg), t);
}

// Joint photon-number distribution P_n(m1, m2) = sum_k |psi_k(m1,m2)|^2,
// laid out like the state grids.
inline std::vector<double> number_distribution(const JointState& s) {
    std::vector<double> p(static_cast<std::size_t>(s.dim) * s.dim, 0.0);
    for (int k = 0; k < 3; ++k) {
        const auto& g = s.branch(k);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += std::norm(g[i]);
    }
    return p;
}

}  // namespace lambdajc
