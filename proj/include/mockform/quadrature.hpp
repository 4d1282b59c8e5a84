#pragma once

#include <complex>
#include <functional>

namespace mockform {

struct QuadratureResult {
    std::complex<double> value;
    double error;
    int intervals;
    bool converged;
};

/// Globally adaptive Gauss–Kronrod (7,15) on [a,b].
/// Stops once the summed error estimate is below max(abs_tol, rel_tol·|value|).
QuadratureResult integrate_gk15(const std::function<std::complex<double>(double)>& f, double a, double b,
                                double abs_tol, double rel_tol, int max_intervals = 4000);

} // namespace mockform
