#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace nonloc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative-or-signed rational number, always stored in lowest
/// terms with a positive denominator. All arithmetic is exact; this type
/// never touches floating point. Probabilities throughout the library are
/// carried as Rational.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

    /// Serializes as "p/q" in lowest terms, e.g. "1/2", "0/1", "-3/4".
    std::string to_string() const;

    /// Parses "p/q" or a bare integer "p". Throws Error{ParseError} on
    /// malformed input or zero denominator.
    static Rational parse(std::string_view text);

    /// Nearest double; for diagnostics only, never fed back into exact code.
    double to_double() const;

private:
    BigInt num_;
    BigInt den_;  // > 0, coprime with num_

    void reduce();
};

}  // namespace nonloc
