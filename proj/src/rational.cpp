#include "scl/rational.hpp"

#include "scl/error.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scl {

i128 checked_add(i128 a, i128 b)
{
    i128 out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("128-bit overflow in addition");
    return out;
}

i128 checked_sub(i128 a, i128 b)
{
    i128 out;
    if (__builtin_sub_overflow(a, b, &out))
        throw OverflowError("128-bit overflow in subtraction");
    return out;
}

i128 checked_mul(i128 a, i128 b)
{
    i128 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("128-bit overflow in multiplication");
    return out;
}

std::string to_string(i128 value)
{
    if (value == 0)
        return "0";
    bool neg = value < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(value + 1)) + 1 : static_cast<unsigned __int128>(value);
    std::string digits;
    while (mag > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (neg)
        digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double to_double(i128 value) { return static_cast<double>(value); }

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(i128 num, i128 den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

Rational Rational::parse(std::string_view text)
{
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty())
        throw bad();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational a = parse(text.substr(0, slash));
        Rational b = parse(text.substr(slash + 1));
        if (b.num_ == 0)
            throw bad();
        return a / b;
    }
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-')
        neg = text[pos++] == '-';
    i128 num = 0;
    i128 den = 1;
    bool digits = false;
    bool frac = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            num = checked_add(checked_mul(num, 10), c - '0');
            if (frac)
                den = checked_mul(den, 10);
            digits = true;
        } else if (c == '.' && !frac) {
            frac = true;
        } else {
            break;
        }
    }
    if (!digits)
        throw bad();
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E')
            throw bad();
        ++pos;
        bool eneg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
            eneg = text[pos++] == '-';
        if (pos >= text.size())
            throw bad();
        int e = 0;
        for (; pos < text.size(); ++pos) {
            if (text[pos] < '0' || text[pos] > '9' || e > 30)
                throw bad();
            e = e * 10 + (text[pos] - '0');
        }
        for (int i = 0; i < e; ++i) {
            if (eneg)
                den = checked_mul(den, 10);
            else
                num = checked_mul(num, 10);
        }
    }
    return Rational(neg ? -num : num, den);
}

Rational Rational::from_double(double value)
{
    if (!std::isfinite(value))
        throw std::invalid_argument("cannot convert non-finite double to rational");
    int exp = 0;
    double mant = std::frexp(value, &exp);
    // value = mant * 2^exp with 0.5 <= |mant| < 1; scale mantissa to an integer.
    i128 num = static_cast<i128>(std::ldexp(mant, 53));
    exp -= 53;
    i128 den = 1;
    while (exp > 0) {
        num = checked_mul(num, 2);
        --exp;
    }
    while (exp < 0) {
        if ((num & 1) == 0 && num != 0) {
            num /= 2;
        } else {
            den = checked_mul(den, 2);
        }
        ++exp;
    }
    return Rational(num, den);
}

double Rational::to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

std::string Rational::str() const
{
    if (den_ == 1)
        return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    i128 g = gcd128(a.den_, b.den_);
    i128 lhs = checked_mul(a.num_, b.den_ / g);
    i128 rhs = checked_mul(b.num_, a.den_ / g);
    return Rational(checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    i128 g1 = gcd128(a.num_, b.den_);
    i128 g2 = gcd128(b.num_, a.den_);
    if (g1 == 0)
        g1 = 1;
    if (g2 == 0)
        g2 = 1;
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0)
        throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    i128 lhs = checked_mul(a.num_, b.den_);
    i128 rhs = checked_mul(b.num_, a.den_);
    return lhs <=> rhs;
}

Rational pow(const Rational& base, int exponent)
{
    if (exponent < 0)
        return Rational(1) / pow(base, -exponent);
    Rational out(1);
    for (int i = 0; i < exponent; ++i)
        out *= base;
    return out;
}

} // namespace scl
