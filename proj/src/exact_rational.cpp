#include "mockform/exact_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace mockform {

namespace {

mpz_class from_i64(std::int64_t v)
{
    static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 assumed");
    return mpz_class(static_cast<long>(v));
}

} // namespace

ExactRational::ExactRational(std::int64_t n) : q_(from_i64(n)) {}

ExactRational::ExactRational(std::int64_t num, std::int64_t den)
    : ExactRational(from_i64(num), from_i64(den))
{
}

ExactRational::ExactRational(const mpz_class& n) : q_(n) {}

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw std::domain_error("ExactRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactRational::ExactRational(const mpq_class& q) : q_(q)
{
    if (q_.get_den() == 0)
        throw std::domain_error("ExactRational: zero denominator");
    q_.canonicalize();
}

ExactRational ExactRational::parse(const std::string& text)
{
    auto slash = text.find('/');
    mpz_class num, den(1);
    try {
        if (slash == std::string::npos) {
            num = mpz_class(text, 10);
        } else {
            num = mpz_class(text.substr(0, slash), 10);
            den = mpz_class(text.substr(slash + 1), 10);
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return ExactRational(num, den);
}

std::string ExactRational::to_string() const
{
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& o)
{
    q_ += o.q_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o)
{
    q_ -= o.q_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o)
{
    q_ *= o.q_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o)
{
    if (o.is_zero())
        throw std::domain_error("ExactRational: division by zero");
    q_ /= o.q_;
    return *this;
}

ExactRational ExactRational::operator-() const
{
    return ExactRational(mpq_class(-q_));
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b)
{
    int c = cmp(a.q_, b.q_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r)
{
    return os << r.to_string();
}

} // namespace mockform
