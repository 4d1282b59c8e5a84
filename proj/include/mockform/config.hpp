#pragma once

#include <cstdint>

namespace mockform {

/// Truncation and tolerance knobs shared by every numeric routine.
struct EvalConfig {
    std::int64_t lattice_bound = 301; // M
    std::int64_t fourier_bound = 40;  // H
    std::int64_t q_terms = 4000;      // N, size of the class number table
    double fd_step = 1e-5;
    double quad_tol = 1e-10;
    double target_tol = 1e-10;

    void validate() const;
};

} // namespace mockform
