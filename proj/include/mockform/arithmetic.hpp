#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "mockform/config.hpp"
#include "mockform/exact_rational.hpp"

namespace mockform {

/// Kronecker symbol (a/n) for arbitrary integers, (a/0) = 1 iff a = ±1.
int kronecker(std::int64_t a, std::int64_t n);

/// The power e^{2πi·k/8}, kept as an exponent so products stay exact.
struct EighthRoot {
    int k = 0; // taken mod 8

    static EighthRoot from_sign(int sign); // ±1
    EighthRoot operator*(EighthRoot o) const { return {(k + o.k) & 7}; }
    EighthRoot inverse() const { return {(8 - (k & 7)) & 7}; }
    EighthRoot pow(std::int64_t e) const;
    bool operator==(const EighthRoot& o) const { return ((k - o.k) & 7) == 0; }
    std::complex<double> value() const;
};

/// ε_d as an exact root: 1 for d ≡ 1 (mod 4), i for d ≡ 3 (mod 4).
EighthRoot epsilon_root(std::int64_t d);
/// ε_d as a complex number. Throws std::invalid_argument for even d.
std::complex<double> epsilon(std::int64_t d);

int moebius(std::int64_t n);
/// Σ_{d|n} d^k.
mpz_class sigma(unsigned k, std::int64_t n);
/// Σ_{d|n} d^k for real k.
double sigma_real(double k, std::int64_t n);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

struct DiscriminantFactorization {
    std::int64_t d; // fundamental discriminant, or 1
    std::int64_t f;
};

bool is_fundamental_discriminant(std::int64_t d);
/// n = d·f² with d fundamental; n must be nonzero and ≡ 0,1 (mod 4).
DiscriminantFactorization fundamental_discriminant(std::int64_t n);

/// B_n with B_1 = −1/2. Memoized; safe to call from several threads.
ExactRational bernoulli(unsigned n);
ExactRational bernoulli_polynomial(unsigned n, const ExactRational& x);
mpz_class binomial(unsigned n, unsigned k);

/// ζ(1−2r) = −B_{2r}/(2r).
ExactRational zeta_exact_neg(unsigned r);
/// ζ(s) for real s > 1 by Euler–Maclaurin.
double zeta_numeric(double s, const EvalConfig& cfg = {});

} // namespace mockform
