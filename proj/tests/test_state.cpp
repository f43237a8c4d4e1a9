#include <cmath>
#include <complex>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "lambdajc/state.hpp"

using namespace lambdajc;
using test_helpers::resonant_harmonious;
using test_helpers::resonant_unit;
using Catch::Matchers::WithinAbs;

TEST_CASE("t = 0 state is the bare coherent product on branch 1") {
    const ModelConfig cfg = resonant_unit(20, 2.0);
    const BlockTable table = BlockTable::build(cfg);
    const CoherentWeights w = CoherentWeights::from_config(cfg);
    const JointState s = assemble_state(cfg, table, w, 0.0);

    for (int n1 = 0; n1 <= 20; ++n1)
        for (int n2 = 0; n2 <= 20; ++n2)
            CHECK_THAT(std::abs(s.psi1[s.idx(n1, n2)] - w.q1[n1] * w.q2[n2]),
                       WithinAbs(0.0, 1e-12));
    for (const complexd& v : s.psi2) CHECK(std::abs(v) < 1e-12);
    for (const complexd& v : s.psi3) CHECK(std::abs(v) < 1e-12);
    CHECK_THAT(s.norm_sq(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("vacuum input populates only the (0,0) block") {
    const ModelConfig cfg = resonant_unit(6, 0.0);
    const JointState s = assemble_state(cfg, 1.3);
    const double p = std::norm(s.psi1[s.idx(0, 0)]) + std::norm(s.psi2[s.idx(1, 0)]) +
                     std::norm(s.psi3[s.idx(0, 1)]);
    CHECK_THAT(p, WithinAbs(1.0, 1e-12));
    CHECK_THAT(s.norm_sq(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("shifted branches vanish on their zero row/column") {
    ModelConfig cfg = resonant_harmonious(15, 1.8);
    cfg.chi = 0.4;
    cfg.g1 = cfg.g2 = Nonlinearity::harmonious();
    const JointState s = assemble_state(cfg, 4.2);
    for (int m2 = 0; m2 < s.dim; ++m2) CHECK(s.psi2[s.idx(0, m2)] == complexd{});
    for (int m1 = 0; m1 < s.dim; ++m1) CHECK(s.psi3[s.idx(m1, 0)] == complexd{});
}

TEST_CASE("norm is conserved along the evolution") {
    ModelConfig configs[3] = {resonant_unit(18, 2.0), resonant_harmonious(18, 2.0),
                              resonant_unit(18, 2.0)};
    configs[1].chi = 0.4;
    configs[1].g1 = configs[1].g2 = Nonlinearity::harmonious();
    configs[2].omega2 = 5.0;
    configs[2].omega3 = 5.0;
    configs[2].Omega1 = 0.9;  // exercise the free phases too
    configs[2].Omega2 = 0.4;
    configs[2].omega1 = 0.3;

    for (const ModelConfig& cfg : configs) {
        const BlockTable table = BlockTable::build(cfg);
        const CoherentWeights w = CoherentWeights::from_config(cfg);
        for (const double t : {0.0, 0.8, 3.3, 11.0, 47.5})
            CHECK_THAT(assemble_state(cfg, table, w, t).norm_sq(),
                       WithinAbs(1.0, 1e-9));
    }
}

TEST_CASE("branch populations stay in [0,1] and sum to 1") {
    const ModelConfig cfg = resonant_unit(18, 2.0);
    const BlockTable table = BlockTable::build(cfg);
    const CoherentWeights w = CoherentWeights::from_config(cfg);
    for (const double t : {0.5, 2.2, 9.7}) {
        const JointState s = assemble_state(cfg, table, w, t);
        double total = 0.0;
        for (int k = 0; k < 3; ++k) {
            double pk = 0.0;
            for (const complexd& v : s.branch(k)) pk += std::norm(v);
            CHECK(pk >= 0.0);
            CHECK(pk <= 1.0 + 1e-12);
            total += pk;
        }
        CHECK_THAT(total, WithinAbs(1.0, 1e-9));
    }
}

TEST_CASE("number distribution: normalization and t = 0 product form") {
    const ModelConfig cfg = resonant_unit(25, 2.0);
    const BlockTable table = BlockTable::build(cfg);
    const CoherentWeights w = CoherentWeights::from_config(cfg);

    const JointState s0 = assemble_state(cfg, table, w, 0.0);
    const auto p0 = number_distribution(s0);
    double sum = 0.0;
    for (const double v : p0) {
        CHECK(v >= 0.0);
        sum += v;
    }
    CHECK_THAT(sum, WithinAbs(1.0, 1e-12));
    for (int m1 = 0; m1 <= 25; ++m1)
        for (int m2 = 0; m2 <= 25; ++m2)
            CHECK_THAT(p0[s0.idx(m1, m2)],
                       WithinAbs(std::norm(w.q1[m1]) * std::norm(w.q2[m2]), 1e-15));

    const auto pt = number_distribution(assemble_state(cfg, table, w, 6.1));
    sum = 0.0;
    for (const double v : pt) sum += v;
    CHECK_THAT(sum, WithinAbs(1.0, 1e-9));
}

TEST_CASE("t = 0 joint Poisson mass at (10,10) for alpha = sqrt(10)") {
    ModelConfig cfg = resonant_unit(40, std::sqrt(10.0));
    cfg.trunc_tol = 1e-10;
    const JointState s = assemble_state(cfg, 0.0);
    const auto p = number_distribution(s);
    // e^{-10} 10^10 / 10!, squared for the two independent modes
    const double poisson10 = std::exp(-10.0) * std::pow(10.0, 10) / 3628800.0;
    CHECK_THAT(p[s.idx(10, 10)], WithinAbs(poisson10 * poisson10, 1e-9));
}

TEST_CASE("vacuum input: distribution supported on three points only") {
    const ModelConfig cfg = resonant_unit(6, 0.0);
    const JointState s = assemble_state(cfg, 0.9);
    const auto p = number_distribution(s);
    for (int m1 = 0; m1 < s.dim; ++m1)
        for (int m2 = 0; m2 < s.dim; ++m2)
            if (!((m1 == 0 && m2 == 0) || (m1 == 1 && m2 == 0) || (m1 == 0 && m2 == 1)))
                CHECK(p[s.idx(m1, m2)] == 0.0);
}

TEST_CASE("free phases change amplitudes pointwise but no modulus") {
    ModelConfig cfg = resonant_unit(12, 1.5);
    cfg.omega1 = 0.4;
    cfg.omega2 = 1.3;
    cfg.omega3 = -0.6;
    cfg.Omega1 = 0.9;
    cfg.Omega2 = 1.7;
    ModelConfig bare = cfg;
    bare.include_free_phases = false;

    const double t = 3.7;
    const JointState with = assemble_state(cfg, t);
    const JointState without = assemble_state(bare, t);
    bool differs = false;
    for (int k = 0; k < 3; ++k) {
        const auto& a = with.branch(k);
        const auto& b = without.branch(k);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK_THAT(std::abs(a[i]), WithinAbs(std::abs(b[i]), 1e-12));
            if (std::abs(a[i] - b[i]) > 1e-9) differs = true;
        }
    }
    CHECK(differs);
}
