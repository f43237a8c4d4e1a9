#pragma once

#include <stdexcept>
#include <string>

namespace lambdajc {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coherent-state tail mass dropped by the Fock truncation exceeds tolerance.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cubic has complex roots; signals a non-Hermitian parameter bug upstream.
struct DegenerateCubicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two cubic roots coincide within tolerance; the partial-fraction weights blow up.
struct DegenerateRootsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Phase mesh below the Nyquist bound for the state's Fock support.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lambdajc
