#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "lambdajc/state.hpp"

namespace lambdajc {

// Field-mode expectation values over rho_F = Tr_Atom |psi><psi|.  The atom
// trace of the three-branch pure state is the sum of per-branch expectations,
// so everything is O(dim^2) with ladder index shifts; the reduced density
// matrix is never materialized.
struct MomentSet {
    complexd m10, m01;  // <a1>, <a2>
    complexd m20, m02;  // <a1^2>, <a2^2>
    complexd m11;       // <a1 a2>
    complexd c11;       // <a1^dag a2>
    complexd g22;       // <a1^2 a2^2>
    double n1 = 0, n2 = 0;        // <n1>, <n2>
    double n1sq = 0, n2sq = 0;    // <a1^dag2 a1^2>, <a2^dag2 a2^2>
    double nn = 0;                // <n1 n2>
};

inline MomentSet moments(const JointState& s) {
    const int d = s.dim;
    std::vector<double> rt(static_cast<std::size_t>(d) + 2);
    for (std::size_t m = 0; m < rt.size(); ++m) rt[m] = std::sqrt(static_cast<double>(m));

    MomentSet mom;
    for (int k = 0; k < 3; ++k) {
        const auto& p = s.branch(k);
        for (int m1 = 0; m1 < d; ++m1) {
            for (int m2 = 0; m2 < d; ++m2) {
                const complexd v = p[s.idx(m1, m2)];
                if (v == complexd{}) continue;
                const complexd cv = std::conj(v);
                const double prob = std::norm(v);
                mom.n1 += m1 * prob;
                mom.n2 += m2 * prob;
                mom.n1sq += static_cast<double>(m1) * (m1 - 1) * prob;
                mom.n2sq += static_cast<double>(m2) * (m2 - 1) * prob;
                mom.nn += static_cast<double>(m1) * m2 * prob;

                const bool u1 = m1 + 1 < d, u2 = m2 + 1 < d;
                if (u1) mom.m10 += cv * rt[m1 + 1] * p[s.idx(m1 + 1, m2)];
                if (u2) mom.m01 += cv * rt[m2 + 1] * p[s.idx(m1, m2 + 1)];
                if (m1 + 2 < d)
                    mom.m20 += cv * rt[m1 + 1] * rt[m1 + 2] * p[s.idx(m1 + 2, m2)];
                if (m2 + 2 < d)
                    mom.m02 += cv * rt[m2 + 1] * rt[m2 + 2] * p[s.idx(m1, m2 + 2)];
                if (u1 && u2)
                    mom.m11 += cv * rt[m1 + 1] * rt[m2 + 1] * p[s.idx(m1 + 1, m2 + 1)];
                if (u1 && m2 >= 1)
                    mom.c11 += std::conj(p[s.idx(m1 + 1, m2 - 1)]) * rt[m1 + 1] * rt[m2] * v;
                if (m1 + 2 < d && m2 + 2 < d)
                    mom.g22 += cv * rt[m1 + 1] * rt[m1 + 2] * rt[m2 + 1] * rt[m2 + 2] *
                               p[s.idx(m1 + 2, m2 + 2)];
            }
        }
    }
    return mom;
}

inline constexpr double kMeanPhotonFloor = 1e-12;

// Mandel Q = (<n^2> - <n>^2 - <n>)/<n> with <n^2> = <a^dag2 a^2> + <n>.
// Q < 0 means sub-Poissonian statistics; Q >= -1 always.  Empty when the mean
// photon number is below floor.
inline std::optional<double> mandel_q(const MomentSet& m, int mode = 1) {
    const double n = mode == 1 ? m.n1 : m.n2;
    const double nsq = mode == 1 ? m.n1sq : m.n2sq;
    if (n <= kMeanPhotonFloor) return std::nullopt;
    return (nsq - n * n) / n;
}

// Cauchy-Schwartz parameter I0 = sqrt(<a1^dag2 a1^2><a2^dag2 a2^2>)/|<n1 n2>| - 1;
// I0 < 0 signals nonclassicality.
inline std::optional<double> csi_parameter(const MomentSet& m) {
    if (std::abs(m.nn) <= kMeanPhotonFloor) return std::nullopt;
    return std::sqrt(m.n1sq * m.n2sq) / std::abs(m.nn) - 1.0;
}

struct TwoModeSqueezing {
    double s_x1, s_x2;  // squeezing iff in (-1, 0)
};

// S_{X1} = Re(<a1^2>+<a2^2>+2<a1^dag a2>+2<a1 a2>) + <n1> + <n2>
//          - 2 [Re(<a1>+<a2>)]^2,  and the conjugate-quadrature partner.
// Equal to 4 Var(X_i) - 1 for X_1 = (a1+a1^dag+a2+a2^dag)/(2 sqrt 2).
inline TwoModeSqueezing two_mode_squeezing(const MomentSet& m) {
    const double sum2 = (m.m20 + m.m02).real();
    const double cross = 2.0 * m.c11.real();
    const double pair = 2.0 * m.m11.real();
    const complexd s1 = m.m10 + m.m01;
    const double re2 = s1.real() * s1.real();
    const double im2 = s1.imag() * s1.imag();
    return {sum2 + cross + pair + m.n1 + m.n2 - 2.0 * re2,
            cross - pair - sum2 + m.n1 + m.n2 - 2.0 * im2};
}

struct SumSqueezing {
    double s_y1, s_y2;  // squeezing iff < 0
};

// Hillery sum-squeezing parameters for Y1 = (a1 a2 + a1^dag a2^dag)/2:
// S_{Y1} = [2 Re<a1^2 a2^2> + 2<n1 n2> - 4 (Re<a1 a2>)^2] / (<n1>+<n2>+1).
inline SumSqueezing sum_squeezing(const MomentSet& m) {
    const double denom = m.n1 + m.n2 + 1.0;
    const double re = m.m11.real(), im = m.m11.imag();
    return {(2.0 * m.g22.real() + 2.0 * m.nn - 4.0 * re * re) / denom,
            (2.0 * m.nn - 2.0 * m.g22.real() - 4.0 * im * im) / denom};
}

}  // namespace lambdajc
