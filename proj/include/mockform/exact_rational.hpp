#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace mockform {

/// Exact rational in lowest terms with positive denominator (backed by GMP).
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(std::int64_t n); // NOLINT(google-explicit-constructor)
    ExactRational(std::int64_t num, std::int64_t den);
    explicit ExactRational(const mpz_class& n);
    ExactRational(const mpz_class& num, const mpz_class& den);
    explicit ExactRational(const mpq_class& q);

    /// Parses "p/q" or "p".
    static ExactRational parse(const std::string& text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    double to_double() const { return q_.get_d(); }
    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    ExactRational& operator+=(const ExactRational& o);
    ExactRational& operator-=(const ExactRational& o);
    ExactRational& operator*=(const ExactRational& o);
    ExactRational& operator/=(const ExactRational& o);
    ExactRational operator-() const;

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

} // namespace mockform
