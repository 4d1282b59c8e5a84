#include "mockform/config.hpp"

#include <stdexcept>

namespace mockform {

void EvalConfig::validate() const
{
    if (lattice_bound < 1 || fourier_bound < 1 || q_terms < 1)
        throw std::invalid_argument("EvalConfig: bounds must be positive");
    if (!(fd_step > 0) || !(quad_tol > 0) || !(target_tol > 0))
        throw std::invalid_argument("EvalConfig: steps and tolerances must be positive");
}

} // namespace mockform
