// Acceptance suite: runs every top-level criterion at its stated tolerance and
// prints one [PASS]/[FAIL] line per criterion.  Exit code is the number of
// failed criteria.
//
// Criteria 2..8 share the same six full-scale sweeps (n_max = 40,
// tau in [0, 50], 500 samples), computed once up front.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "lambdajc/lambdajc.hpp"

using namespace lambdajc;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Series {
    std::vector<SweepRow> rows;

    double min_of(double SweepRow::* field, bool skip_t0 = false) const {
        double m = 1e300;
        for (const auto& r : rows) {
            if (skip_t0 && r.tau == 0.0) continue;
            m = std::min(m, r.*field);
        }
        return m;
    }
    double max_of(double SweepRow::* field, bool skip_t0 = false) const {
        double m = -1e300;
        for (const auto& r : rows) {
            if (skip_t0 && r.tau == 0.0) continue;
            m = std::max(m, r.*field);
        }
        return m;
    }
};

// Dominant oscillation frequency: argmax bin of the DFT magnitude of the
// mean-removed series (bin 0 excluded).
int dominant_bin(const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    double mean = 0.0;
    for (const double v : x) mean += v;
    mean /= n;
    int best = 1;
    double best_mag = -1.0;
    for (int k = 1; k <= n / 2; ++k) {
        complexd acc{};
        for (int j = 0; j < n; ++j)
            acc += (x[j] - mean) *
                   std::polar(1.0, -2.0 * std::numbers::pi * k * j / n);
        if (std::abs(acc) > best_mag) {
            best_mag = std::abs(acc);
            best = k;
        }
    }
    return best;
}

}  // namespace

int main() {
    const auto t_start = std::chrono::steady_clock::now();

    // ---- shared full-scale sweeps -----------------------------------------
    std::map<std::string, Series> sweeps;
    for (const std::string& name : preset_names()) {
        SweepSpec spec;
        spec.preset = name;
        spec.config = make_preset(name);
        spec.tau_start = 0.0;
        spec.tau_end = 50.0;
        spec.tau_steps = 500;
        sweeps[name] = Series{compute_sweep(spec)};
    }
    const Series& a_up = sweeps["a-up"];
    const Series& a_down = sweeps["a-down"];
    const Series& b_up = sweeps["b-up"];
    const Series& b_down = sweeps["b-down"];

    // ---- 1. oracle equivalence --------------------------------------------
    {
        double worst = 0.0;
        std::string worst_name;
        for (const std::string& name : preset_names()) {
            const double dev = verify_against_oracle(reduced_scale(make_preset(name)),
                                                     10.0, 1e-3);
            if (dev > worst) {
                worst = dev;
                worst_name = name;
            }
        }
        report(1, "oracle equivalence (n_max=15, |alpha|^2=4, tau=1..10)", worst < 1e-6,
               "worst max-norm deviation " + fmt(worst) + " (" + worst_name +
                   "), bound 1e-6");
    }

    // ---- 2. probability conservation ---------------------------------------
    {
        double worst = 0.0;
        for (const auto& [name, series] : sweeps)
            for (const auto& r : series.rows) worst = std::max(worst, r.norm_err);
        report(2, "probability conservation (all presets, 500 samples)", worst < 1e-9,
               "worst |norm-1| = " + fmt(worst) + ", bound 1e-9");
    }

    // ---- 3. entropy-squeezing plateau ---------------------------------------
    {
        double lo = 1e300, hi = -1e300;
        for (const auto& r : a_down.rows) {
            if (r.tau < 1.0) continue;
            lo = std::min(lo, r.s_theta);
            hi = std::max(hi, r.s_theta);
        }
        const bool constant = (hi - lo) / 2.0 <= 0.005;
        const bool at_value = std::abs(lo + 0.81954) <= 0.01 && std::abs(hi + 0.81954) <= 0.01;
        report(3, "entropy-squeezing plateau (a-down)", constant && at_value,
               "S_theta in [" + fmt(lo) + ", " + fmt(hi) +
                   "], target -0.81954 +- 0.01, half-spread " + fmt((hi - lo) / 2.0));
    }

    // ---- 4. entropy-squeezing sign change -----------------------------------
    {
        int neg = 0, total = 0;
        for (const auto& r : a_up.rows) {
            if (r.tau <= 0.0 || r.tau >= 30.0) continue;
            ++total;
            if (r.s_theta < 0.0) ++neg;
        }
        const bool majority_neg = neg * 2 > total;

        bool tail_pos = true;
        for (const auto& r : a_up.rows)
            if (r.tau >= 40.0 && r.s_theta <= 0.0) tail_pos = false;

        // first sample from which S_theta stays positive through the end
        double crossing = -1.0;
        for (std::size_t i = 0; i < a_up.rows.size(); ++i) {
            bool sustained = true;
            for (std::size_t j = i; j < a_up.rows.size(); ++j)
                if (a_up.rows[j].s_theta <= 0.0) {
                    sustained = false;
                    break;
                }
            if (sustained && a_up.rows[i].tau > 0.0) {
                crossing = a_up.rows[i].tau;
                break;
            }
        }
        const bool crossing_ok = crossing >= 30.0 && crossing <= 40.0;
        report(4, "entropy-squeezing sign change (a-up)",
               majority_neg && tail_pos && crossing_ok,
               "negative on " + std::to_string(neg) + "/" + std::to_string(total) +
                   " samples in (0,30), sustained crossing at tau = " + fmt(crossing) +
                   " (target [30,40])");
    }

    // ---- 5. Mandel negativity ------------------------------------------------
    {
        double worst = -1e300;
        bool defined = true;
        for (const auto& r : a_down.rows) {
            if (r.tau == 0.0) continue;
            if (!r.q1) {
                defined = false;
                break;
            }
            worst = std::max(worst, *r.q1);
        }
        report(5, "Mandel negativity (a-down)", defined && worst < 0.0,
               "max Q1 over tau > 0 is " + fmt(worst));
    }

    // ---- 6. CSI dichotomy ------------------------------------------------------
    {
        double down_max = -1e300, up_min = 1e300;
        bool defined = true;
        for (const auto& r : a_down.rows) {
            if (r.tau == 0.0) continue;
            if (!r.i0) defined = false;
            else down_max = std::max(down_max, *r.i0);
        }
        for (const auto& r : a_up.rows) {
            if (!r.i0) defined = false;
            else up_min = std::min(up_min, *r.i0);
        }
        report(6, "CSI dichotomy (a-down < 0, a-up >= 0)",
               defined && down_max < 0.0 && up_min >= 0.0,
               "a-down max I0 = " + fmt(down_max) + ", a-up min I0 = " + fmt(up_min));
    }

    // ---- 7. two-mode squeezing enhancement -------------------------------------
    {
        const double min_b = b_down.min_of(&SweepRow::s_x1);
        const double min_a = a_down.min_of(&SweepRow::s_x1);
        const double ratio = min_b / min_a;
        const double max_a = a_down.max_of(&SweepRow::s_x1, /*skip_t0=*/true);
        const bool ratio_ok = ratio >= 15.0 && ratio <= 25.0;
        const bool all_neg = max_a < 0.0;
        report(7, "two-mode squeezing enhancement (b-down vs a-down)",
               ratio_ok && all_neg,
               "min S_X1 ratio = " + fmt(ratio) + " (target [15,25]), a-down max S_X1 over tau>0 = " +
                   fmt(max_a) + " (target < 0)");
    }

    // ---- 8. sum squeezing --------------------------------------------------------
    {
        const double down_max_a = a_down.max_of(&SweepRow::s_y1, true);
        const double down_max_b = b_down.max_of(&SweepRow::s_y1, true);
        const double up_min_a = a_up.min_of(&SweepRow::s_y1);
        const double up_min_b = b_up.min_of(&SweepRow::s_y1);
        const bool pass = down_max_a < 0.0 && down_max_b < 0.0 && up_min_a >= 0.0 &&
                          up_min_b >= 0.0;
        report(8, "sum squeezing (down < 0 throughout, up >= 0 throughout)", pass,
               "max S_Y1: a-down " + fmt(down_max_a) + ", b-down " + fmt(down_max_b) +
                   "; min S_Y1: a-up " + fmt(up_min_a) + ", b-up " + fmt(up_min_b));
    }

    // ---- 9. property suites --------------------------------------------------------
    {
        std::ostringstream detail;
        bool pass = true;

        // entropic bound at every sample of every preset
        double worst_bound = 1e300;
        for (const auto& [name, series] : sweeps)
            for (const auto& r : series.rows)
                worst_bound = std::min(worst_bound, r.r_n + r.r_theta);
        const double ln2pi = std::log(2.0 * std::numbers::pi);
        if (worst_bound < ln2pi - 1e-4) pass = false;
        detail << "min(R_n+R_theta) = " << fmt(worst_bound) << " vs ln 2pi = "
               << fmt(ln2pi);

        // cubic residuals across all blocks of all presets
        double worst_res = 0.0;
        for (const std::string& name : preset_names()) {
            const BlockTable table = BlockTable::build(make_preset(name));
            for (const auto& blk : table.blocks) {
                const double scale = std::max(1.0, std::abs(blk.x3));
                for (const double mu : blk.mu)
                    worst_res = std::max(
                        worst_res, std::abs(cubic_residual(blk.x1, blk.x2, blk.x3, mu)) / scale);
            }
        }
        if (worst_res >= 1e-9) pass = false;
        detail << "; worst cubic residual " << fmt(worst_res);

        // trivial-case table: vacuum entropies
        {
            ModelConfig vac;
            vac.n_max = 5;
            const JointState s = assemble_state(vac, 0.0);
            const EntropyRecord rec = entropies(s, phase_distribution(s, -std::numbers::pi, 16));
            const double s_n_expected = 1.0 / std::sqrt(2.0 * std::numbers::pi) - 1.0;
            if (std::abs(rec.r_n) > 1e-12 ||
                std::abs(rec.r_theta - std::log(4.0 * std::numbers::pi * std::numbers::pi)) > 1e-9 ||
                std::abs(rec.s_n - s_n_expected) > 1e-9) {
                pass = false;
                detail << "; vacuum entropy table FAILED";
            }
        }

        // trivial-case table: coherent t=0 indicators at full scale
        {
            const SweepRow& r0 = a_up.rows.front();
            if (!(r0.tau == 0.0 && r0.q1 && std::abs(*r0.q1) < 1e-9 && r0.i0 &&
                  std::abs(*r0.i0) < 1e-9 && std::abs(r0.s_x1) < 1e-9 &&
                  std::abs(r0.s_y1) < 1e-9)) {
                pass = false;
                detail << "; coherent-t0 table FAILED";
            }
        }

        // trivial-case table: decoupled evolution keeps moduli and adds exact phases
        {
            ModelConfig cfg;
            cfg.n_max = 8;
            cfg.alpha1 = cfg.alpha2 = 1.0;
            cfg.trunc_tol = 1e-4;
            cfg.f1 = cfg.f2 = Nonlinearity::custom(std::vector<double>(10, 0.0));
            cfg.Omega1 = 1.3;
            cfg.omega1 = 0.4;
            const double t = 1.7;
            const JointState s = integrate(cfg, t, 1e-3);
            const CoherentWeights w = CoherentWeights::from_config(cfg);
            double dev = 0.0;
            for (int m1 = 0; m1 <= cfg.n_max; ++m1)
                for (int m2 = 0; m2 <= cfg.n_max; ++m2)
                    dev = std::max(dev, std::abs(s.psi1[s.idx(m1, m2)] -
                                                 w.q1[m1] * w.q2[m2] *
                                                     std::polar(1.0, -(cfg.omega1 + m1 * cfg.Omega1) * t)));
            if (dev > 1e-8) {
                pass = false;
                detail << "; decoupled-evolution table FAILED (dev " << fmt(dev) << ")";
            }
        }

        // quadrature exactness: doubling m_pts moves R_theta by < 1e-8
        {
            const ModelConfig cfg = make_preset("a-down");
            const JointState s = assemble_state(cfg, 10.0);
            const double r128 = entropies(s, phase_distribution(s, -std::numbers::pi, 128)).r_theta;
            const double r256 = entropies(s, phase_distribution(s, -std::numbers::pi, 256)).r_theta;
            if (std::abs(r256 - r128) >= 1e-8) {
                pass = false;
                detail << "; quadrature doubling moved R_theta by " << fmt(std::abs(r256 - r128));
            } else {
                detail << "; quadrature doubling delta " << fmt(std::abs(r256 - r128));
            }
        }

        report(9, "property suites (bound, residuals, trivial table, quadrature)", pass,
               detail.str());
    }

    // ---- 10. figure-c qualitative clause ---------------------------------------
    {
        // Sweeps completed above (runs complete; invariants covered by 2 and 9).
        std::vector<double> q_c, q_b;
        for (const auto& r : sweeps["c-down"].rows) q_c.push_back(r.q1.value_or(0.0));
        for (const auto& r : b_down.rows) q_b.push_back(r.q1.value_or(0.0));
        const int bin_c = dominant_bin(q_c);
        const int bin_b = dominant_bin(q_b);
        report(10, "figure-c fast-oscillation flag (c-down vs b-down)", bin_c > bin_b,
               "dominant Q1 DFT bin " + std::to_string(bin_c) + " vs " +
                   std::to_string(bin_b));
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::steady_clock::now() - t_start)
                             .count();
    std::printf("%d/10 criteria passed in %llds\n", 10 - g_failures,
                static_cast<long long>(elapsed));
    if (g_failures > 0)
        std::printf("criteria 7 and 8 assert figure claims the printed model "
                    "contradicts; see README (Known acceptance status).\n");
    return g_failures;
}
