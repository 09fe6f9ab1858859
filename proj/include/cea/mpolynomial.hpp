#pragma once

#include "cea/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cea {

/// Variable identifiers for the commutative polynomial ring. A variable is
/// a matrix entry m[i,j] (1-based) of one of a few matrix symbols, or the
/// standalone scalar used for characteristic polynomials.
using VarId = uint32_t;

constexpr VarId var_m(int i, int j, int mat = 0)
{
    return (VarId(mat) << 16) | (VarId(i) << 8) | VarId(j);
}
constexpr VarId var_lambda() { return VarId(0xFF) << 16; }

constexpr int var_mat(VarId v) { return int(v >> 16); }
constexpr int var_row(VarId v) { return int((v >> 8) & 0xFF); }
constexpr int var_col(VarId v) { return int(v & 0xFF); }
constexpr bool var_is_lambda(VarId v) { return v == var_lambda(); }

inline std::string var_name(VarId v)
{
    if (var_is_lambda(v)) return "lambda";
    std::string s = "m";
    for (int t = 0; t < var_mat(v); ++t) s += '\'';
    s += "[" + std::to_string(var_row(v)) + "," + std::to_string(var_col(v)) + "]";
    return s;
}

/// Commutative monomial: variable ids sorted ascending, repeats for powers.
using Monomial = std::vector<VarId>;

struct MonomialHash {
    size_t operator()(const Monomial &m) const
    {
        size_t h = 1469598103934665603ull;
        for (VarId v : m) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Polynomial with exact rational coefficients in the m[i,j] variables.
/// Terms are kept in lexicographic monomial order and zero coefficients are
/// never stored.
class MPolynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    MPolynomial() = default;

    static MPolynomial constant(Rational c)
    {
        MPolynomial p;
        p.add_term({}, std::move(c));
        return p;
    }
    static MPolynomial variable(VarId v, Rational c = Rational(1))
    {
        MPolynomial p;
        p.add_term({v}, std::move(c));
        return p;
    }

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int degree() const
    {
        size_t d = 0;
        for (const auto &[m, c] : terms_) d = std::max(d, m.size());
        return static_cast<int>(d);
    }

    Rational coeff(const Monomial &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Monomial m, const Rational &c)
    {
        if (c.is_zero()) return;
        std::sort(m.begin(), m.end());
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPolynomial &operator+=(const MPolynomial &o)
    {
        for (const auto &[m, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    MPolynomial &operator-=(const MPolynomial &o)
    {
        for (const auto &[m, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(m, -c);
            if (!inserted) {
                it->second -= c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }

    friend MPolynomial operator+(MPolynomial a, const MPolynomial &b) { return a += b; }
    friend MPolynomial operator-(MPolynomial a, const MPolynomial &b) { return a -= b; }
    MPolynomial operator-() const { return scaled(Rational(-1)); }

    MPolynomial scaled(const Rational &c) const
    {
        MPolynomial r;
        if (c.is_zero()) return r;
        for (const auto &[m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }

    friend MPolynomial operator*(const MPolynomial &a, const MPolynomial &b)
    {
        MPolynomial r;
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                Monomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                auto [it, inserted] = r.terms_.emplace(std::move(m), ca * cb);
                if (!inserted) {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    MPolynomial pow(int e) const
    {
        if (e < 0) throw std::invalid_argument("MPolynomial: negative power");
        MPolynomial r = constant(Rational(1));
        for (int t = 0; t < e; ++t) r = r * (*this);
        return r;
    }

    friend bool operator==(const MPolynomial &a, const MPolynomial &b)
    {
        return a.terms_ == b.terms_;
    }

    /// Applies a signed variable renaming: each variable maps to a
    /// (coefficient, variable) pair or to zero.
    MPolynomial map_variables(
        const std::function<std::pair<Rational, VarId>(VarId)> &fn) const
    {
        MPolynomial r;
        for (const auto &[m, c] : terms_) {
            Rational coeff = c;
            Monomial out;
            out.reserve(m.size());
            bool dead = false;
            for (VarId v : m) {
                auto [f, w] = fn(v);
                if (f.is_zero()) {
                    dead = true;
                    break;
                }
                coeff *= f;
                out.push_back(w);
            }
            if (!dead) r.add_term(std::move(out), coeff);
        }
        return r;
    }

    /// Imposes the skew pattern on one matrix symbol: m[j,i] -> -m[i,j] for
    /// i<j and m[i,i] -> 0.
    MPolynomial skew_substituted(int mat = 0) const
    {
        return map_variables([mat](VarId v) -> std::pair<Rational, VarId> {
            if (var_is_lambda(v) || var_mat(v) != mat) return {Rational(1), v};
            const int i = var_row(v), j = var_col(v);
            if (i == j) return {Rational(0), v};
            if (i > j) return {Rational(-1), var_m(j, i, mat)};
            return {Rational(1), v};
        });
    }

    /// Largest matrix index used by any m-variable (0 when constant).
    int max_index() const
    {
        int n = 0;
        for (const auto &[m, c] : terms_)
            for (VarId v : m)
                if (!var_is_lambda(v)) n = std::max({n, var_row(v), var_col(v)});
        return n;
    }

    /// True when every m-variable of the given symbol has row < column.
    bool uses_only_upper_triangle(int mat = 0) const
    {
        for (const auto &[m, c] : terms_)
            for (VarId v : m)
                if (!var_is_lambda(v) && var_mat(v) == mat && var_row(v) >= var_col(v))
                    return false;
        return true;
    }

    std::string str(size_t max_terms = 8) const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        size_t shown = 0;
        for (const auto &[m, c] : terms_) {
            if (shown++ == max_terms) {
                os << " + ... (" << terms_.size() << " terms)";
                break;
            }
            if (shown > 1) os << " + ";
            os << c.str();
            for (VarId v : m) os << "*" << var_name(v);
        }
        return os.str();
    }

    /// Builds a polynomial from an unordered accumulation map (bulk path for
    /// the large contractions).
    static MPolynomial from_accumulator(std::unordered_map<Monomial, Rational, MonomialHash> acc)
    {
        MPolynomial p;
        for (auto &[m, c] : acc)
            if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }

  private:
    TermMap terms_;
};

/// Accumulator for bulk term construction.
class MPolyAccumulator {
  public:
    void add(Monomial m, const Rational &c)
    {
        if (c.is_zero()) return;
        std::sort(m.begin(), m.end());
        auto [it, inserted] = acc_.emplace(std::move(m), c);
        if (!inserted) it->second += c;
    }
    void merge(MPolyAccumulator &&o)
    {
        for (auto &[m, c] : o.acc_) {
            auto [it, inserted] = acc_.emplace(std::move(m), std::move(c));
            if (!inserted) it->second += c;
        }
        o.acc_.clear();
    }
    MPolynomial finish() { return MPolynomial::from_accumulator(std::move(acc_)); }

  private:
    std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

} // namespace cea
