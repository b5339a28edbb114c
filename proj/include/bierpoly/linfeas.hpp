#pragma once

#include "bierpoly/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bierpoly {

enum class Relation { Greater, GreaterEqual };

/// coeffs . x  (> or >=)  0
struct LinearRow {
    std::vector<Rational> coeffs;
    Relation relation = Relation::Greater;
};

/// Homogeneous system of strict and non-strict inequalities over free
/// (unrestricted sign) rational variables.
struct LinearSystem {
    std::vector<std::string> variables;
    std::vector<LinearRow> rows;

    std::size_t width() const { return variables.size(); }

    void add(std::vector<Rational> coeffs, Relation rel) {
        if (coeffs.size() != width()) throw std::invalid_argument("row width does not match the variable count");
        rows.push_back({std::move(coeffs), rel});
    }

    /// One row per line, e.g. "x1 + x2 - y3 > 0".
    std::string dump() const {
        std::ostringstream out;
        for (const auto& row : rows) {
            bool first = true;
            for (std::size_t j = 0; j < width(); ++j) {
                const Rational& c = row.coeffs[j];
                if (c == 0) continue;
                Rational mag = c < 0 ? Rational(-c) : c;
                if (first)
                    out << (c < 0 ? "-" : "");
                else
                    out << (c < 0 ? " - " : " + ");
                if (mag != 1) out << to_string(mag) << "*";
                out << variables[j];
                first = false;
            }
            if (first) out << "0";
            out << (row.relation == Relation::Greater ? " > 0" : " >= 0") << "\n";
        }
        return out.str();
    }
};

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> witness;  // present iff feasible
};

/// True iff every row holds exactly at w (strict rows strictly).
inline bool verify(const LinearSystem& s, const std::vector<Rational>& w) {
    if (w.size() != s.width()) throw std::invalid_argument("witness width does not match the system");
    for (const auto& row : s.rows) {
        Rational v = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (row.coeffs[j] != 0 && w[j] != 0) v += row.coeffs[j] * w[j];
        if (row.relation == Relation::Greater ? v <= 0 : v < 0) return false;
    }
    return true;
}

namespace detail {

// Phase-1 simplex tableau. Columns: u (n), v (n) with x = u - v, one surplus
// per row, one artificial per strict row.
class Phase1 {
public:
    explicit Phase1(const LinearSystem& s) : n_(s.width()), m_(s.rows.size()) {
        std::size_t strict = 0;
        for (const auto& r : s.rows)
            if (r.relation == Relation::Greater) ++strict;
        cols_ = 2 * n_ + m_ + strict;
        tab_.assign(m_, std::vector<Rational>(cols_, Rational(0)));
        rhs_.assign(m_, Rational(0));
        basis_.assign(m_, 0);
        std::size_t art = 2 * n_ + m_;
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& r = s.rows[i];
            // Strict rows use the gap form a.x >= 1; homogeneity makes this
            // equivalent to a.x > 0 up to positive scaling.
            bool strict_row = r.relation == Relation::Greater;
            int flip = strict_row ? 1 : -1;
            for (std::size_t j = 0; j < n_; ++j) {
                if (r.coeffs[j] == 0) continue;
                tab_[i][j] = flip * r.coeffs[j];
                tab_[i][n_ + j] = -flip * r.coeffs[j];
            }
            tab_[i][2 * n_ + i] = -flip;
            if (strict_row) {
                tab_[i][art] = 1;
                rhs_[i] = 1;
                basis_[i] = art++;
            } else {
                basis_[i] = 2 * n_ + i;
            }
        }
        first_art_ = 2 * n_ + m_;
        cost_.assign(cols_, Rational(0));
        for (std::size_t j = first_art_; j < cols_; ++j) cost_[j] = 1;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= first_art_)
                for (std::size_t j = 0; j < cols_; ++j)
                    if (tab_[i][j] != 0) cost_[j] -= tab_[i][j];
        for (std::size_t i = 0; i < m_; ++i) cost_[basis_[i]] = 0;
    }

    FeasibilityResult run() {
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (cost_[j] < 0) {
                    enter = j;  // Bland: lowest index
                    break;
                }
            if (enter == cols_) break;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / tab_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) break;  // phase-1 objective is bounded below; not reached
            pivot(leave, enter);
        }
        FeasibilityResult res;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= first_art_ && rhs_[i] != 0) return res;
        res.feasible = true;
        res.witness.assign(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) res.witness[basis_[i]] += rhs_[i];
            else if (basis_[i] < 2 * n_) res.witness[basis_[i] - n_] -= rhs_[i];
        }
        return res;
    }

private:
    void pivot(std::size_t r, std::size_t c) {
        Rational p = tab_[r][c];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < cols_; ++j)
            if (tab_[r][j] != 0) {
                tab_[r][j] /= p;
                nz.push_back(j);
            }
        rhs_[r] /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || tab_[i][c] == 0) continue;
            Rational f = tab_[i][c];
            for (std::size_t j : nz) tab_[i][j] -= f * tab_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        if (cost_[c] != 0) {
            Rational f = cost_[c];
            for (std::size_t j : nz) cost_[j] -= f * tab_[r][j];
        }
        basis_[r] = c;
    }

    std::size_t n_, m_, cols_ = 0, first_art_ = 0;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> rhs_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Exact feasibility of a homogeneous mixed strict / non-strict system.
/// Strict rows are replaced by `expr >= 1`; the witness satisfies the
/// original rows exactly.
inline FeasibilityResult solve(const LinearSystem& s) {
    for (const auto& r : s.rows)
        if (r.coeffs.size() != s.width()) throw std::invalid_argument("row width does not match the variable count");
    if (s.rows.empty()) return {true, std::vector<Rational>(s.width(), Rational(0))};
    auto res = detail::Phase1(s).run();
    if (res.feasible && !verify(s, res.witness)) throw std::logic_error("simplex witness failed verification");
    return res;
}

}  // namespace bierpoly
