#pragma once

#include <cmath>
#include <complex>

#include "lambdajc/errors.hpp"
#include "lambdajc/nonlinearity.hpp"

namespace lambdajc {

using complexd = std::complex<double>;

// Physical parameter set for a Lambda-type three-level atom coupled to two
// cavity modes through intensity-dependent couplings, inside a (deformed)
// cross-Kerr medium.  Level |1> is the upper level; |2> and |3> are reached
// by emission into mode 1 and mode 2 respectively.
//
// Detunings are never stored: delta2 = omega2 - omega1 + Omega1 and
// delta3 = omega3 - omega1 + Omega2, derived on demand.
struct ModelConfig {
    double lambda1 = 1.0;  // coupling strength, transition |1>-|2> (rad/time)
    double lambda2 = 1.0;  // coupling strength, transition |1>-|3> (rad/time)
    double chi = 0.0;      // cross-Kerr susceptibility (rad/time)

    double omega1 = 0.0, omega2 = 0.0, omega3 = 0.0;  // atomic level frequencies
    double Omega1 = 0.0, Omega2 = 0.0;                // field mode frequencies

    Nonlinearity f1, f2;  // coupling deformations (a f(n))
    Nonlinearity g1, g2;  // Kerr deformations (a g(n))

    int n_max = 40;                  // Fock truncation per mode
    complexd alpha1{0.0, 0.0};       // initial coherent amplitudes
    complexd alpha2{0.0, 0.0};
    bool include_free_phases = true; // carry e^{-i gamma_k t} in the joint state
    double trunc_tol = 1e-10;        // admissible coherent tail mass per mode

    double delta2() const { return omega2 - omega1 + Omega1; }
    double delta3() const { return omega3 - omega1 + Omega2; }

    void validate() const {
        if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
            throw ConfigError("couplings lambda1, lambda2 must be positive");
        if (n_max < 1) throw ConfigError("n_max must be at least 1");
        if (!(trunc_tol > 0.0)) throw ConfigError("trunc_tol must be positive");
        for (const double v : {lambda1, lambda2, chi, omega1, omega2, omega3,
                               Omega1, Omega2, alpha1.real(), alpha1.imag(),
                               alpha2.real(), alpha2.imag()}) {
            if (!std::isfinite(v)) throw ConfigError("non-finite model parameter");
        }
        f1.check_table(n_max);
        f2.check_table(n_max);
        g1.check_table(n_max);
        g2.check_table(n_max);
    }
};

}  // namespace lambdajc
