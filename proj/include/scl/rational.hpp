#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace scl {

using i128 = __int128;

// Overflow-checked 128-bit arithmetic; throws OverflowError.
i128 checked_add(i128 a, i128 b);
i128 checked_sub(i128 a, i128 b);
i128 checked_mul(i128 a, i128 b);

std::string to_string(i128 value);
double to_double(i128 value);

// Exact rational with normalized sign (denominator > 0) and lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(i128 num) : num_(num) {}
    Rational(i128 num, i128 den);

    // Parses "3", "-2/7", "0.05", "1e-3" exactly.
    static Rational parse(std::string_view text);
    // Exact binary value of a finite double.
    static Rational from_double(double value);

    i128 num() const { return num_; }
    i128 den() const { return den_; }
    double to_double() const;
    std::string str() const;

    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    i128 num_ = 0;
    i128 den_ = 1;
};

Rational pow(const Rational& base, int exponent);

} // namespace scl
