#include "clt_lab/rational.hpp"

#include "clt_lab/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <ostream>

namespace clt {

namespace {

using Integer = Rational::Integer;

[[noreturn]] void parse_failure(std::string_view text, const char* why)
{
    throw Error(ErrorKind::ParseError,
                "cannot parse number '" + std::string(text) + "': " + why);
}

Integer parse_digits(std::string_view digits, std::string_view whole)
{
    if (digits.empty()) {
        parse_failure(whole, "missing digits");
    }
    Integer value = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            parse_failure(whole, "unexpected character");
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

Integer pow10(long exponent)
{
    Integer result = 1;
    for (long i = 0; i < exponent; ++i) {
        result *= 10;
    }
    return result;
}

Rational parse_decimal(std::string_view text, std::string_view whole)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        text = text.substr(0, e);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (exp_text.empty() || exp_text.size() > 6) {
            parse_failure(whole, "bad exponent");
        }
        exponent = parse_digits(exp_text, whole).convert_to<long>();
        if (exp_negative) {
            exponent = -exponent;
        }
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
        parse_failure(whole, "missing digits");
    }

    Integer mantissa = int_part.empty() ? Integer(0) : parse_digits(int_part, whole);
    if (!frac_part.empty()) {
        mantissa = mantissa * pow10(static_cast<long>(frac_part.size())) +
                   parse_digits(frac_part, whole);
    }
    exponent -= static_cast<long>(frac_part.size());
    if (negative) {
        mantissa = -mantissa;
    }
    if (exponent >= 0) {
        return Rational(mantissa * pow10(exponent), Integer(1));
    }
    return Rational(mantissa, pow10(-exponent));
}

} // namespace

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    normalize();
}

void Rational::normalize()
{
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    const Integer g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text)
{
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        parse_failure(whole, "empty");
    }

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num_text = text.substr(0, slash);
        std::string_view den_text = text.substr(slash + 1);
        bool negative = false;
        if (!num_text.empty() && (num_text.front() == '-' || num_text.front() == '+')) {
            negative = num_text.front() == '-';
            num_text.remove_prefix(1);
        }
        if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
            negative = negative != (den_text.front() == '-');
            den_text.remove_prefix(1);
        }
        Integer num = parse_digits(num_text, whole);
        Integer den = parse_digits(den_text, whole);
        if (den == 0) {
            parse_failure(whole, "zero denominator");
        }
        return Rational(negative ? Integer(-num) : num, den);
    }
    return parse_decimal(text, whole);
}

Rational Rational::from_double(double value)
{
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::NonFiniteInput, "Rational::from_double: non-finite value");
    }
    if (value == 0.0) {
        return Rational();
    }
    int exponent = 0;
    const double mantissa = std::frexp(value, &exponent);
    // mantissa * 2^53 is an exact integer.
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Integer num = scaled;
    Integer den = 1;
    if (exponent >= 0) {
        num <<= exponent;
    } else {
        den <<= -exponent;
    }
    return Rational(num, den);
}

double Rational::to_double() const
{
    return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
}

std::string Rational::str() const
{
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational::Integer Rational::floor() const
{
    Integer q = num_ / den_; // truncates toward zero
    if (num_ < 0 && q * den_ != num_) {
        q -= 1;
    }
    return q;
}

Rational Rational::frac() const
{
    return *this - Rational(floor());
}

Rational& Rational::operator+=(const Rational& rhs)
{
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.num_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    const Integer a = lhs.num_ * rhs.den_;
    const Integer b = rhs.num_ * lhs.den_;
    if (a < b) {
        return std::strong_ordering::less;
    }
    if (a > b) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Rational abs(const Rational& value)
{
    return value.sign() < 0 ? -value : value;
}

Rational gcd(const Rational& lhs, const Rational& rhs)
{
    const Integer a = boost::multiprecision::abs(lhs.num() * rhs.den());
    const Integer b = boost::multiprecision::abs(rhs.num() * lhs.den());
    return Rational(boost::multiprecision::gcd(a, b), lhs.den() * rhs.den());
}

std::ostream& operator<<(std::ostream& os, const Rational& value)
{
    return os << value.str();
}

} // namespace clt
