#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace clt {

/// Exact rational number in canonical form: den > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    using Integer = boost::multiprecision::cpp_int;

    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {} // NOLINT(google-explicit-constructor)
    explicit Rational(Integer value) : num_(std::move(value)), den_(1) {}
    Rational(Integer num, Integer den);

    /// Parses "a/b", an integer, or a decimal such as "-0.125" or "2.5e-3".
    static Rational parse(std::string_view text);

    /// Exact value of a finite double (every double is a dyadic rational).
    static Rational from_double(double value);

    [[nodiscard]] const Integer& num() const noexcept { return num_; }
    [[nodiscard]] const Integer& den() const noexcept { return den_; }

    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string str() const;
    [[nodiscard]] bool is_integer() const { return den_ == 1; }
    [[nodiscard]] int sign() const { return num_.sign(); }

    /// Largest integer not exceeding the value.
    [[nodiscard]] Integer floor() const;
    /// value - floor(value), in [0, 1).
    [[nodiscard]] Rational frac() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& value) { return Rational(-value.num_, value.den_); }

    friend bool operator==(const Rational& lhs, const Rational& rhs)
    {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    void normalize();

    Integer num_;
    Integer den_;
};

Rational abs(const Rational& value);

/// Greatest common divisor of two rationals: the largest r > 0 with a/r and b/r
/// both integers. gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d), reduced.
Rational gcd(const Rational& lhs, const Rational& rhs);

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace clt
