#pragma once

// Exact rational numbers over BigInt. Values are always stored reduced with a
// positive denominator; the sign lives on the numerator. No floating point is
// involved anywhere: decimal text converts exactly via powers of ten.

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ratrec/bigint.hpp"
#include "ratrec/errors.hpp"

namespace ratrec {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        reduce();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational out;
        out.num_ = -num_;
        out.den_ = den_;
        return out;
    }

    Rational abs() const { return num_.sign() < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (num_.is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    // Largest integer <= value (a/b rounded toward minus infinity).
    BigInt floor() const {
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        if (r.sign() < 0) q = q - BigInt(1);
        return q;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // "p/q", with "/q" omitted for integers. Re-parsing the result gives back
    // an equal value.
    std::string to_string() const {
        std::string out = num_.to_string();
        if (!den_.is_one()) out += "/" + den_.to_string();
        return out;
    }

    // Fixed-point decimal with the given number of places, rounded half away
    // from zero. Used for rendering exact values back into approximate text.
    std::string to_decimal_string(std::size_t places) const {
        BigInt scale = BigInt::pow10(places);
        BigInt scaled = num_.abs() * scale;
        BigInt q, r;
        BigInt::divmod(scaled, den_, q, r);
        if (r + r >= den_) q = q + BigInt(1);
        std::string digits = q.to_string();
        if (digits.size() <= places) digits = std::string(places + 1 - digits.size(), '0') + digits;
        std::string out;
        if (num_.sign() < 0) out += '-';
        out += digits.substr(0, digits.size() - places);
        if (places > 0) {
            out += '.';
            out += digits.substr(digits.size() - places);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
        return os << v.to_string();
    }

private:
    BigInt num_;
    BigInt den_;

    void reduce() {
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

inline Rational abs(const Rational& v) { return v.abs(); }

namespace detail {

inline std::size_t scan_digits(std::string_view text, std::size_t pos) {
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    return pos;
}

}  // namespace detail

// Converts numeric text to the exactly equal rational. Accepted forms:
//   [+|-] digits [ '.' digits ] [ (e|E) [+|-] digits ]     decimal, e.g. ".8106421859"
//   [+|-] digits '/' digits                                 fraction, e.g. "23/39"
// The integer part may be empty when a fractional part is present.
inline Rational parse_decimal(std::string_view text) {
    if (text.empty()) throw ParseError("empty input", 0);
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }

    std::size_t int_begin = pos;
    std::size_t int_end = detail::scan_digits(text, pos);
    pos = int_end;

    if (pos < text.size() && text[pos] == '/') {
        if (int_end == int_begin) throw ParseError("expected digits before '/'", pos);
        std::size_t den_begin = ++pos;
        std::size_t den_end = detail::scan_digits(text, pos);
        if (den_end == den_begin) throw ParseError("expected digits after '/'", pos);
        if (den_end != text.size()) throw ParseError("unexpected character", den_end);
        BigInt num = BigInt::from_string(text.substr(int_begin, int_end - int_begin));
        BigInt den = BigInt::from_string(text.substr(den_begin, den_end - den_begin));
        if (den.is_zero()) throw std::domain_error("parse_decimal: zero denominator");
        if (negative) num = -num;
        return Rational(std::move(num), std::move(den));
    }

    std::size_t frac_begin = 0, frac_end = 0;
    if (pos < text.size() && text[pos] == '.') {
        frac_begin = ++pos;
        frac_end = detail::scan_digits(text, pos);
        if (frac_end == frac_begin) throw ParseError("expected digits after '.'", pos);
        pos = frac_end;
    }
    if (int_end == int_begin && frac_end == frac_begin)
        throw ParseError("expected digits", int_begin);

    long long exponent = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_negative = text[pos] == '-';
            ++pos;
        }
        std::size_t exp_begin = pos;
        std::size_t exp_end = detail::scan_digits(text, pos);
        if (exp_end == exp_begin) throw ParseError("expected digits in exponent", pos);
        if (exp_end - exp_begin > 9) throw ParseError("exponent out of range", exp_begin);
        for (std::size_t i = exp_begin; i < exp_end; ++i)
            exponent = exponent * 10 + (text[i] - '0');
        if (exp_negative) exponent = -exponent;
        pos = exp_end;
    }
    if (pos != text.size()) throw ParseError("unexpected character", pos);

    std::string mantissa;
    mantissa.append(text.substr(int_begin, int_end - int_begin));
    mantissa.append(text.substr(frac_begin, frac_end - frac_begin));
    BigInt num = BigInt::from_string(mantissa);
    if (negative) num = -num;

    long long scale = exponent - static_cast<long long>(frac_end - frac_begin);
    if (scale >= 0)
        return Rational(num * BigInt::pow10(static_cast<std::size_t>(scale)), BigInt(1));
    return Rational(std::move(num), BigInt::pow10(static_cast<std::size_t>(-scale)));
}

}  // namespace ratrec
