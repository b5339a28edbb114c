#pragma once

#include "bierpoly/bits.hpp"
#include "bierpoly/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace bierpoly {

/// Polynomial of degree <= 1 in each variable: a sum of c_S * prod_{i in S} x_i,
/// keyed by the variable set S.
class MultilinearPoly {
public:
    using Terms = std::map<Mask, Rational>;

    MultilinearPoly() = default;
    explicit MultilinearPoly(Terms terms) : terms_(std::move(terms)) { prune(); }

    static MultilinearPoly constant(const Rational& c) { return MultilinearPoly(Terms{{Mask{0}, c}}); }
    static MultilinearPoly variable(int i) { return MultilinearPoly(Terms{{bit(i), Rational(1)}}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Mask support() const {
        Mask m = 0;
        for (const auto& [s, c] : terms_) m |= s;
        return m;
    }

    void add_term(Mask monomial, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(monomial, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultilinearPoly& operator+=(const MultilinearPoly& o) {
        for (const auto& [s, c] : o.terms_) add_term(s, c);
        return *this;
    }

    MultilinearPoly operator-() const {
        MultilinearPoly p = *this;
        for (auto& [s, c] : p.terms_) c = -c;
        return p;
    }

    MultilinearPoly scaled(const Rational& k) const {
        if (k == 0) return {};
        MultilinearPoly p = *this;
        for (auto& [s, c] : p.terms_) c *= k;
        return p;
    }

    Rational evaluate(const std::vector<Rational>& x) const {
        Rational total = 0;
        for (const auto& [s, c] : terms_) {
            Rational t = c;
            for (int i : elements(s)) t *= x[static_cast<std::size_t>(i)];
            total += t;
        }
        return total;
    }

    double evaluate(const std::vector<double>& x) const {
        double total = 0;
        for (const auto& [s, c] : terms_) {
            double t = to_double(c);
            for (int i : elements(s)) t *= x[static_cast<std::size_t>(i)];
            total += t;
        }
        return total;
    }

    /// Divides out the largest monomial dividing every term.
    MultilinearPoly without_common_monomial() const {
        if (terms_.empty()) return *this;
        Mask common = ~Mask{0};
        for (const auto& [s, c] : terms_) common &= s;
        if (common == 0) return *this;
        MultilinearPoly p;
        for (const auto& [s, c] : terms_) p.terms_.emplace(s & ~common, c);
        return p;
    }

    /// Positive rescaling to coprime integer coefficients.
    MultilinearPoly primitive() const {
        if (terms_.empty()) return *this;
        Integer l = 1, g = 0;
        for (const auto& [s, c] : terms_) {
            const Integer& d = boost::multiprecision::denominator(c);
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        for (const auto& [s, c] : terms_) g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::numerator(c) * (l / boost::multiprecision::denominator(c))));
        if (g < 0) g = -g;
        return scaled(Rational(l, g));
    }

    /// "5*t1*t2 + 3*t1 - 4*t2": higher degree first, then by variable mask.
    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Mask, Rational>> sorted(terms_.begin(), terms_.end());
        std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return popcount(a.first) != popcount(b.first) ? popcount(a.first) > popcount(b.first) : a.first < b.first;
        });
        std::string out;
        bool first = true;
        for (const auto& [s, c] : sorted) {
            Rational mag = c < 0 ? Rational(-c) : c;
            out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            std::string mono;
            for (int i : elements(s)) mono += (mono.empty() ? "" : "*") + names[static_cast<std::size_t>(i)];
            if (mono.empty())
                out += bierpoly::to_string(mag);
            else if (mag == 1)
                out += mono;
            else
                out += bierpoly::to_string(mag) + "*" + mono;
            first = false;
        }
        return out;
    }

    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;
    friend bool operator<(const MultilinearPoly& a, const MultilinearPoly& b) { return a.terms_ < b.terms_; }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }

    Terms terms_;
};

}  // namespace bierpoly
