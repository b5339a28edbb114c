#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bierpoly {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline int sign(const Rational& q) { return q.sign(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/// Parses "p", "p/q", or a decimal literal such as "-0.0884603" or "1.5e-3"
/// into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string num(text.substr(0, slash)), den(text.substr(slash + 1));
        auto digits = [](const std::string& s, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
            if (i >= s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        if (!digits(num, true) || !digits(den, false)) throw fail();
        if (num[0] == '+') num.erase(0, 1);
        // a leading zero would make Boost read the digits as octal
        auto strip = [](std::string& s, std::size_t from) { s.erase(from, std::min(s.find_first_not_of('0', from), s.size() - 1) - from); };
        strip(num, num[0] == '-' ? 1 : 0);
        strip(den, 0);
        Integer d(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(Integer(num), d);
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    std::string mantissa;
    int frac_digits = 0;
    bool seen_point = false, seen_digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            mantissa += c;
            seen_digit = true;
            if (seen_point) ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw fail();
    long exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') throw fail();
        std::string exp_text(text.substr(i + 1));
        if (exp_text.empty()) throw fail();
        std::size_t used = 0;
        try {
            exponent = std::stol(exp_text, &used);
        } catch (const std::exception&) {
            throw fail();
        }
        if (used != exp_text.size() || exponent > 4000 || exponent < -4000) throw fail();
    }
    exponent -= frac_digits;
    // a leading zero would make Boost read the digits as octal
    mantissa.erase(0, std::min(mantissa.find_first_not_of('0'), mantissa.size() - 1));
    Integer num(mantissa);
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(exponent)));
    Rational value = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
    return negative ? Rational(-value) : value;
}

/// Exact value of a finite double.
inline Rational exact_rational(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value cannot be rationalized");
    int exp = 0;
    double mant = std::frexp(x, &exp);
    auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r{Integer(scaled)};
    if (exp > 0) r *= Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(exp)));
    if (exp < 0) r /= Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(-exp)));
    return r;
}

/// Best rational approximation of `x` with denominator at most `max_den`
/// (continued-fraction convergents plus the final semiconvergent).
inline Rational best_rational_approximation(const Rational& x, const Integer& max_den) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(x) <= max_den) return x;
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Integer num = numerator(x), den = denominator(x);
    while (den != 0) {
        Integer a = num / den;
        if (num < 0 && a * den != num) a -= 1;  // floor division
        Integer q2 = q0 + a * q1;
        if (q2 > max_den) {
            Integer k = (max_den - q0) / q1;
            Rational semi(p0 + k * p1, q0 + k * q1);
            Rational conv(p1, q1);
            Rational d_semi = semi - x, d_conv = conv - x;
            if (d_semi < 0) d_semi = -d_semi;
            if (d_conv < 0) d_conv = -d_conv;
            return d_semi < d_conv ? semi : conv;
        }
        Integer p2 = p0 + a * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Integer rem = num - a * den;
        num = den;
        den = rem;
    }
    return Rational(p1, q1);
}

inline Rational best_rational_approximation(double x, const Integer& max_den) {
    return best_rational_approximation(exact_rational(x), max_den);
}

inline Rational sum(std::span<const Rational> xs) {
    Rational s = 0;
    for (const auto& x : xs) s += x;
    return s;
}

}  // namespace bierpoly
