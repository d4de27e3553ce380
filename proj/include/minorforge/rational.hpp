#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace minorforge {

// Exact rational arithmetic for densities and thresholds. All quantities in
// this toolkit are tiny, so int64 numerators/denominators with __int128
// cross-multiplication never overflow.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n) : num(n), den(1) {}
    Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::invalid_argument("rational division by zero");
        return {num * o.den, den * o.num};
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num * o.den < (__int128)o.num * den;
    }
    bool operator<=(const Rational& o) const {
        return (__int128)num * o.den <= (__int128)o.num * den;
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    int64_t floor() const {
        int64_t q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }
    int64_t ceil() const {
        int64_t q = num / den;
        if (num % den != 0 && num > 0) ++q;
        return q;
    }

    double to_double() const { return double(num) / double(den); }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Accepts "3", "2/3" and decimal forms like "0.05".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash != std::string::npos)
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(s));
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        int64_t den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        bool neg = !whole.empty() && whole[0] == '-';
        int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        int64_t f = frac.empty() ? 0 : std::stoll(frac);
        int64_t n = (neg ? -1 : 1) * ((w < 0 ? -w : w) * den + f);
        return Rational(n, den);
    }
};

}  // namespace minorforge
