#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mockform {

// Parameters outside the region where a series or integral converges.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numeric procedure stopped before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

// Two independent computations of the same exact quantity disagree.
class CrossCheckError : public std::runtime_error {
public:
    CrossCheckError(const std::string& what, std::int64_t n)
        : std::runtime_error(what), n_(n) {}
    std::int64_t offending() const noexcept { return n_; }

private:
    std::int64_t n_;
};

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mockform
