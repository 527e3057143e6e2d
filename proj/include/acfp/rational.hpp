#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace acfp {

using Int = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Non-negative exact rational, always stored reduced; zero is canonically 0/1.
/// Exactness is what makes the tracing algebra work, so no fixed-width
/// integer assumption is made anywhere.
class Rational {
public:
    Rational() : value_(0) {}

    Rational(const Int& num, const Int& den) {
        if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
        if (num < 0) throw std::invalid_argument("Rational: numerator must be non-negative");
        value_ = BigRational(num, den);  // canonicalizes, reduces
    }

    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

    /// Wraps an already-computed exact value; rejects negatives.
    static Rational from_big(const BigRational& v) {
        if (v < 0) throw std::invalid_argument("Rational: negative value");
        Rational r;
        r.value_ = v;
        return r;
    }

    Int num() const { return boost::multiprecision::numerator(value_); }
    Int den() const { return boost::multiprecision::denominator(value_); }
    const BigRational& big() const { return value_; }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    double as_double() const { return value_.convert_to<double>(); }

    std::string str() const { return num().str() + "/" + den().str(); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    BigRational value_;
};

}  // namespace acfp
