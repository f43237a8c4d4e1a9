#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "lambdajc/errors.hpp"

namespace lambdajc {

enum class NonlinearityKind { Unit, Harmonious, Custom };

// Deformation function f(n) of the bosonic operators.  Only the combinations
// sqrt(n)*f(n) (ladder action of a f(n)) and n*f(n)^2 (Kerr weight of
// (a g(n))^dag (a g(n))) are physical, and both vanish at n = 0 for every
// kind -- including Harmonious f(n) = 1/sqrt(n), whose bare f(0) is singular.
struct Nonlinearity {
    NonlinearityKind kind = NonlinearityKind::Unit;
    std::vector<double> table;  // Custom only: f(0), f(1), ..., f(n_max+1)

    static Nonlinearity unit() { return {NonlinearityKind::Unit, {}}; }
    static Nonlinearity harmonious() { return {NonlinearityKind::Harmonious, {}}; }
    static Nonlinearity custom(std::vector<double> values) {
        return {NonlinearityKind::Custom, std::move(values)};
    }

    // sqrt(n) * f(n)
    double ladder_factor(int n) const {
        if (n <= 0) return 0.0;
        switch (kind) {
            case NonlinearityKind::Unit: return std::sqrt(static_cast<double>(n));
            case NonlinearityKind::Harmonious: return 1.0;
            case NonlinearityKind::Custom:
                return std::sqrt(static_cast<double>(n)) * table_at(n);
        }
        return 0.0;
    }

    // n * f(n)^2
    double kerr_factor(int n) const {
        if (n <= 0) return 0.0;
        switch (kind) {
            case NonlinearityKind::Unit: return static_cast<double>(n);
            case NonlinearityKind::Harmonious: return 1.0;
            case NonlinearityKind::Custom: {
                const double f = table_at(n);
                return static_cast<double>(n) * f * f;
            }
        }
        return 0.0;
    }

    // Custom tables must cover 0..n_max+1 because the couplings use f(n+1).
    void check_table(int n_max) const {
        if (kind == NonlinearityKind::Custom &&
            table.size() < static_cast<std::size_t>(n_max) + 2) {
            throw ConfigError("custom nonlinearity table must supply f(0..n_max+1)");
        }
    }

private:
    double table_at(int n) const {
        if (static_cast<std::size_t>(n) >= table.size())
            throw ConfigError("custom nonlinearity table too short");
        return table[static_cast<std::size_t>(n)];
    }
};

}  // namespace lambdajc
