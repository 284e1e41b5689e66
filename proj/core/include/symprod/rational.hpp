// Exact rational scalar used for every coefficient in the engine.
//
// Arithmetic never rounds. Values are kept in canonical form: lowest terms,
// denominator > 0 (the backing boost::multiprecision::cpp_rational maintains
// this; the accessors and tests rely on it).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace symprod {

using Integer = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, 3 * s reads naturally
    Rational(Integer n) : v_(std::move(n)) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) {
            throw std::invalid_argument("Rational: zero denominator");
        }
        // The backing constructor rejects negative denominators.
        v_ = den < 0 ? Backing(-num, -den) : Backing(num, den);
    }
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }

    // Checked narrowing; only valid for integral values in int64 range.
    long long as_int64() const {
        if (!is_integer()) {
            throw std::domain_error("Rational::as_int64: value " + str() + " is not an integer");
        }
        const Integer n = numerator();
        if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min()) {
            throw std::overflow_error("Rational::as_int64: value " + str() + " out of range");
        }
        return n.convert_to<long long>();
    }

    // Prints "p/q", or just "p" for integers.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) {
            s += "/" + denominator().str();
        }
        return s;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    using Backing = boost::multiprecision::cpp_rational;
    Backing v_;
};

// x^e for integer e; e < 0 requires x != 0.
inline Rational pow(const Rational& x, long long e) {
    if (e < 0) {
        if (x.is_zero()) {
            throw std::domain_error("pow: zero base with negative exponent");
        }
        return Rational(1) / pow(x, -e);
    }
    Rational acc(1);
    Rational base = x;
    for (long long k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

}  // namespace symprod
