#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mockform/config.hpp"
#include "mockform/eisenstein.hpp"
#include "mockform/report.hpp"

namespace mockform {

struct VerifyOptions {
    EvalConfig cfg;
    std::uint64_t seed = 1729;
};

/// multiplier, dirichlet, fourier, modularity, shadow, laplacian, limits.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for unknown names.
std::vector<ReportRecord> run_suite(const std::string& suite, const VerifyOptions& opts = {});

/// Deterministic points with u ∈ [0,1) and v ∈ [v_lo, v_hi].
std::vector<UpperHalfPoint> sample_points(std::uint64_t seed, int count, double v_lo, double v_hi);

} // namespace mockform
