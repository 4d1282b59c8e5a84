#pragma once

#include <cstdint>
#include <vector>

#include "mockform/characters.hpp"
#include "mockform/config.hpp"
#include "mockform/exact_rational.hpp"

namespace mockform {

/// ax² + bxy + cy².
struct QuadraticForm {
    std::int64_t a, b, c;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    bool operator==(const QuadraticForm&) const = default;
};

/// Reduced forms of discriminant −N, ordered by a, then by b descending.
std::vector<QuadraticForm> reduced_forms(std::int64_t N);

/// Hurwitz class number by counting reduced forms.
ExactRational hurwitz(std::int64_t N);

/// T_s^χ(f) = Σ_{a|f} μ(a)χ(a)a^{s−1}σ_{2s−1}(f/a).
ExactRational t_chi(unsigned s, const CharacterHandle& h, std::int64_t f);
/// The same sum for real s.
double t_chi_real(double s, const CharacterHandle& h, std::int64_t f);

/// Cohen's H(r, N) = L(1−r, χ_d)·T_r^{χ_d}(f) where (−1)^r N = d f².
ExactRational cohen_h(unsigned r, std::int64_t N);

class ClassNumberTable {
public:
    ClassNumberTable() = default;
    /// Takes values for n = 0..values.size()−1 and checks the table invariants.
    explicit ClassNumberTable(std::vector<ExactRational> values);

    std::int64_t max_n() const { return static_cast<std::int64_t>(values_.size()) - 1; }
    const ExactRational& at(std::int64_t n) const;
    double value(std::int64_t n) const { return doubles_.at(static_cast<std::size_t>(n)); }
    const std::vector<ExactRational>& values() const { return values_; }

private:
    std::vector<ExactRational> values_;
    std::vector<double> doubles_;
};

/// H(n) for 0 ≤ n ≤ max_n, each checked against cohen_h(1, n).
/// Throws CrossCheckError naming the first n where the two disagree.
ClassNumberTable build_table(std::int64_t max_n, const EvalConfig& cfg = {});

} // namespace mockform
