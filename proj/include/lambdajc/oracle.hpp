#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lambdajc/coherent.hpp"
#include "lambdajc/model.hpp"
#include "lambdajc/state.hpp"

namespace lambdajc {

// Brute-force cross-check of the closed-form solution: the full Hamiltonian
// on the truncated tripartite space, integrated with fixed-step RK4 in the
// lab picture.  Matrix elements are re-derived from the Hamiltonian itself
// (diagonal free part, diagonal Kerr, ladder couplings) and deliberately do
// not reuse block_constants, so transcription bugs in either path surface.
struct SparseHamiltonian {
    int grid_dim = 0;  // n_max + 2
    int dim = 0;       // 3 * grid_dim^2

    struct Entry {
        int row, col;
        complexd value;
    };
    std::vector<Entry> entries;

    int index(int level, int m1, int m2) const {
        return (level * grid_dim + m1) * grid_dim + m2;
    }

    void apply(const std::vector<complexd>& x, std::vector<complexd>& y) const {
        std::fill(y.begin(), y.end(), complexd{});
        for (const Entry& e : entries) y[e.row] += e.value * x[e.col];
    }

    // Every off-diagonal entry must have its exact conjugate partner and
    // every diagonal entry must be real.
    bool is_hermitian() const {
        for (const Entry& e : entries) {
            if (e.row == e.col) {
                if (e.value.imag() != 0.0) return false;
                continue;
            }
            const bool paired =
                std::any_of(entries.begin(), entries.end(), [&](const Entry& o) {
                    return o.row == e.col && o.col == e.row &&
                           o.value == std::conj(e.value);
                });
            if (!paired) return false;
        }
        return true;
    }

    double max_abs_entry() const {
        double m = 0.0;
        for (const Entry& e : entries) m = std::max(m, std::abs(e.value));
        return m;
    }
};

inline SparseHamiltonian build_hamiltonian(const ModelConfig& cfg) {
    cfg.validate();
    SparseHamiltonian h;
    h.grid_dim = cfg.n_max + 2;
    h.dim = 3 * h.grid_dim * h.grid_dim;

    const double omega[3] = {cfg.omega1, cfg.omega2, cfg.omega3};
    for (int level = 0; level < 3; ++level) {
        for (int m1 = 0; m1 < h.grid_dim; ++m1) {
            for (int m2 = 0; m2 < h.grid_dim; ++m2) {
                const double diag = omega[level] + m1 * cfg.Omega1 + m2 * cfg.Omega2 +
                                    cfg.chi * cfg.g1.kerr_factor(m1) *
                                        cfg.g2.kerr_factor(m2);
                const int i = h.index(level, m1, m2);
                h.entries.push_back({i, i, diag});
            }
        }
    }
    // lambda1 (A1 sigma12 + h.c.): <2, m1+1, m2| H |1, m1, m2>
    for (int m1 = 0; m1 + 1 < h.grid_dim; ++m1) {
        for (int m2 = 0; m2 < h.grid_dim; ++m2) {
            const double k = cfg.lambda1 * cfg.f1.ladder_factor(m1 + 1);
            const int a = h.index(0, m1, m2), b = h.index(1, m1 + 1, m2);
            h.entries.push_back({b, a, k});
            h.entries.push_back({a, b, k});
        }
    }
    // lambda2 (A2 sigma13 + h.c.): <3, m1, m2+1| H |1, m1, m2>
    for (int m1 = 0; m1 < h.grid_dim; ++m1) {
        for (int m2 = 0; m2 + 1 < h.grid_dim; ++m2) {
            const double k = cfg.lambda2 * cfg.f2.ladder_factor(m2 + 1);
            const int a = h.index(0, m1, m2), c = h.index(2, m1, m2 + 1);
            h.entries.push_back({c, a, k});
            h.entries.push_back({a, c, k});
        }
    }
    return h;
}

// Fixed-step RK4 propagation of i d|psi>/dt = H |psi> from the Eq.-(10)
// initial condition (atom excited, coherent field).  No adaptive stepping;
// convergence is checked by halving dt in the tests.
class SchroedingerIntegrator {
public:
    SchroedingerIntegrator(const ModelConfig& cfg, double dt)
        : SchroedingerIntegrator(cfg, dt, CoherentWeights::from_config(cfg)) {}

    // Any product weights work as the field preparation, not just coherent.
    SchroedingerIntegrator(const ModelConfig& cfg, double dt, const CoherentWeights& w)
        : cfg_(cfg), h_(build_hamiltonian(cfg)), dt_(dt) {
        if (!(dt > 0.0)) throw StepSizeError("dt must be positive");
        const double bound = 0.01 / std::max(h_.max_abs_entry(), 1e-300);
        if (dt > bound)
            throw StepSizeError("dt " + std::to_string(dt) +
                                " exceeds spectral bound " + std::to_string(bound));
        psi_.assign(h_.dim, complexd{});
        if (w.q1.size() < static_cast<std::size_t>(cfg.n_max) + 1 ||
            w.q2.size() < static_cast<std::size_t>(cfg.n_max) + 1)
            throw DimensionError("field weights shorter than the truncation");
        for (int n1 = 0; n1 <= cfg.n_max; ++n1)
            for (int n2 = 0; n2 <= cfg.n_max; ++n2)
                psi_[h_.index(0, n1, n2)] = w.q1[n1] * w.q2[n2];
        initial_norm_ = norm_sq();
        k1_.resize(psi_.size());
        k2_.resize(psi_.size());
        k3_.resize(psi_.size());
        k4_.resize(psi_.size());
        tmp_.resize(psi_.size());
    }

    double time() const { return t_; }

    void advance_to(double t_end) {
        if (t_end < t_) throw StepSizeError("cannot integrate backwards");
        while (t_end - t_ > 0.5 * dt_) {
            const double step = std::min(dt_, t_end - t_);
            rk4_step(step);
            t_ += step;
        }
        if (t_end > t_) {
            rk4_step(t_end - t_);
            t_ = t_end;
        }
        if (std::abs(norm_sq() - initial_norm_) > 1e-8)
            throw StepSizeError("norm drift exceeds 1e-8; reduce dt");
    }

    // Re-expressed in the JointState layout (lab picture, phases included).
    JointState state() const {
        JointState s = JointState::zero(cfg_.n_max, t_);
        for (int m1 = 0; m1 < h_.grid_dim; ++m1) {
            for (int m2 = 0; m2 < h_.grid_dim; ++m2) {
                s.psi1[s.idx(m1, m2)] = psi_[h_.index(0, m1, m2)];
                s.psi2[s.idx(m1, m2)] = psi_[h_.index(1, m1, m2)];
                s.psi3[s.idx(m1, m2)] = psi_[h_.index(2, m1, m2)];
            }
        }
        return s;
    }

    const SparseHamiltonian& hamiltonian() const { return h_; }

    double energy() const {
        std::vector<complexd> hx(psi_.size());
        h_.apply(psi_, hx);
        complexd e{};
        for (std::size_t i = 0; i < psi_.size(); ++i) e += std::conj(psi_[i]) * hx[i];
        return e.real();
    }

private:
    double norm_sq() const {
        double s = 0.0;
        for (const complexd& v : psi_) s += std::norm(v);
        return s;
    }

    void rhs(const std::vector<complexd>& x, std::vector<complexd>& y) const {
        h_.apply(x, y);
        for (complexd& v : y) v *= complexd{0.0, -1.0};
    }

    void rk4_step(double dt) {
        rhs(psi_, k1_);
        for (std::size_t i = 0; i < psi_.size(); ++i) tmp_[i] = psi_[i] + 0.5 * dt * k1_[i];
        rhs(tmp_, k2_);
        for (std::size_t i = 0; i < psi_.size(); ++i) tmp_[i] = psi_[i] + 0.5 * dt * k2_[i];
        rhs(tmp_, k3_);
        for (std::size_t i = 0; i < psi_.size(); ++i) tmp_[i] = psi_[i] + dt * k3_[i];
        rhs(tmp_, k4_);
        for (std::size_t i = 0; i < psi_.size(); ++i)
            psi_[i] += dt / 6.0 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }

    ModelConfig cfg_;
    SparseHamiltonian h_;
    double dt_;
    double t_ = 0.0;
    double initial_norm_ = 1.0;
    std::vector<complexd> psi_;
    mutable std::vector<complexd> k1_, k2_, k3_, k4_, tmp_;
};

inline JointState integrate(const ModelConfig& cfg, double t_end, double dt) {
    SchroedingerIntegrator integ(cfg, dt);
    integ.advance_to(t_end);
    return integ.state();
}

inline double max_norm_deviation(const JointState& a, const JointState& b) {
    if (a.dim != b.dim) throw DimensionError("mismatched state truncations");
    double m = 0.0;
    for (int k = 0; k < 3; ++k) {
        const auto& ga = a.branch(k);
        const auto& gb = b.branch(k);
        for (std::size_t i = 0; i < ga.size(); ++i)
            m = std::max(m, std::abs(ga[i] - gb[i]));
    }
    return m;
}

}  // namespace lambdajc
