#include "core/rational.hpp"

#include "core/error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace nonloc {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        throw Error(ErrorCode::BadArgument, "rational with zero denominator");
    }
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw Error(ErrorCode::BadArgument, "division of rational by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::string Rational::to_string() const {
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] {
        throw Error(ErrorCode::ParseError,
                    "invalid rational \"" + std::string(text) + "\"");
    };
    if (text.empty()) fail();
    std::string_view num_part = text;
    std::string_view den_part = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }
    auto parse_int = [&](std::string_view s) -> BigInt {
        if (s.empty()) fail();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) fail();
        for (std::size_t k = i; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') fail();
        }
        return BigInt(std::string(s));
    };
    BigInt num = parse_int(num_part);
    BigInt den = parse_int(den_part);
    if (den == 0) fail();
    return Rational(std::move(num), std::move(den));
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

}  // namespace nonloc
