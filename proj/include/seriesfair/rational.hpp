#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace seriesfair {

/// Arbitrary-precision rational number.
///
/// Thin wrapper around boost::multiprecision::cpp_rational that guarantees a
/// canonical form (reduced, denominator > 0), rejects zero denominators with
/// std::domain_error, and adds exact conversion from IEEE-754 doubles.  All
/// arithmetic is exact; nothing in this class ever rounds.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(const Int& n) : value_(n) {}

    Rational(long long num, long long den) { init(Int(num), Int(den)); }
    Rational(const Int& num, const Int& den) { init(num, den); }

    /// Exact value of a finite double (every finite double is a dyadic
    /// rational, so no precision is lost).  Throws std::domain_error for
    /// NaN or infinity.
    static Rational from_double(double x) {
        if (!std::isfinite(x)) {
            throw std::domain_error("Rational::from_double: value is not finite");
        }
        Rational r;
        r.value_ = boost::multiprecision::cpp_rational(x);
        return r;
    }

    Int numerator() const { return boost::multiprecision::numerator(value_); }
    Int denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }

    /// -1, 0, or +1.
    int sign() const { return value_.sign(); }

    /// Nearest double; the single point where rounding may occur.
    double to_double() const { return value_.convert_to<double>(); }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const {
        if (is_integer()) {
            return numerator().str();
        }
        return numerator().str() + "/" + denominator().str();
    }

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    void init(Int num, Int den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        // cpp_rational's (num, den) constructor requires den > 0; normalise
        // the sign ourselves so callers may pass either.
        if (den < 0) {
            num = -num;
            den = -den;
        }
        value_ = boost::multiprecision::cpp_rational(num, den);
    }

    boost::multiprecision::cpp_rational value_;
};

} // namespace seriesfair
