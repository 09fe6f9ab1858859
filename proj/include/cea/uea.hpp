#pragma once

#include "cea/invariants.hpp"
#include "cea/lie_algebra.hpp"
#include "cea/mpolynomial.hpp"
#include "cea/parallel.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace cea {

/// PBW monomial: basis indices in nondecreasing order.
using PBWMonomial = std::vector<uint16_t>;

/// Element of the universal enveloping algebra in PBW normal form.
struct UEAElement {
    const LieAlgebra *algebra = nullptr;
    std::map<PBWMonomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const
    {
        size_t d = 0;
        for (const auto &[m, c] : terms) d = std::max(d, m.size());
        return static_cast<int>(d);
    }
    size_t term_count() const { return terms.size(); }

    void add_term(PBWMonomial m, const Rational &c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    UEAElement &operator+=(const UEAElement &o)
    {
        check_same(o);
        for (const auto &[m, c] : o.terms) add_term(m, c);
        return *this;
    }
    UEAElement &operator-=(const UEAElement &o)
    {
        check_same(o);
        for (const auto &[m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend UEAElement operator+(UEAElement a, const UEAElement &b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement &b) { return a -= b; }

    UEAElement scaled(const Rational &c) const
    {
        UEAElement r;
        r.algebra = algebra;
        if (c.is_zero()) return r;
        for (const auto &[m, v] : terms) r.terms.emplace(m, v * c);
        return r;
    }

    friend bool operator==(const UEAElement &a, const UEAElement &b)
    {
        return a.algebra == b.algebra && a.terms == b.terms;
    }

  private:
    void check_same(const UEAElement &o) const
    {
        if (algebra != o.algebra)
            throw std::invalid_argument("UEAElement: mixed algebras");
    }
};

struct CentralityVerdict {
    bool central = true;
    int witness_generator = -1;
    UEAElement witness_residual;
};

struct EquivarianceVerdict {
    bool holds = false;
    UEAElement action_image;  // symmetrized image of the polynomial action
    UEAElement adjoint_image; // commutator with the symmetrized element
    UEAElement residual;      // action_image + adjoint_image
};

/// PBW workspace for one algebra: straightening, symmetrized products, the
/// substitution m[i,j] -> L_{ij}, commutators and centrality checks.
///
/// Straightening rewrites x_b x_a (b > a) as x_a x_b + [x_b, x_a] until the
/// word is nondecreasing. The normal form does not depend on the rewrite
/// order (the PBW diamond); the optimized path picks the rightmost
/// inversion and memoizes small words, the brute-force oracle picks the
/// leftmost inversion and caches nothing.
class Enveloping {
  public:
    explicit Enveloping(const LieAlgebra &alg, size_t word_cache_max_len = 5,
                        size_t sym_cache_max_len = 6)
        : alg_(alg), word_cache_max_len_(word_cache_max_len),
          sym_cache_max_len_(sym_cache_max_len)
    {
    }

    const LieAlgebra &algebra() const { return alg_; }

    UEAElement zero() const
    {
        UEAElement e;
        e.algebra = &alg_;
        return e;
    }
    UEAElement one() const
    {
        UEAElement e = zero();
        e.add_term({}, Rational(1));
        return e;
    }
    UEAElement from_vector(const LieVector &v) const
    {
        check_vector(v);
        UEAElement e = zero();
        for (int a = 0; a < alg_.dim(); ++a)
            if (!v.coeffs[a].is_zero()) e.add_term({uint16_t(a)}, v.coeffs[a]);
        return e;
    }

    /// Normal form of a product of algebra elements (left to right).
    UEAElement pbw_normalize(std::span<const LieVector> word)
    {
        UEAElement out = zero();
        expand_vectors(word, 0, {}, Rational(1), out, /*leftmost=*/false);
        return out;
    }

    /// Independent oracle: naive recursive expansion, always rewriting the
    /// leftmost inversion, no caching anywhere.
    UEAElement brute_force_normalize(std::span<const LieVector> word) const
    {
        UEAElement out = zero();
        std::vector<uint16_t> idx;
        std::function<void(size_t, Rational)> expand = [&](size_t pos, Rational c) {
            if (pos == word.size()) {
                brute_force_word(idx, c, out);
                return;
            }
            check_vector(word[pos]);
            for (int a = 0; a < alg_.dim(); ++a) {
                if (word[pos].coeffs[a].is_zero()) continue;
                idx.push_back(uint16_t(a));
                expand(pos + 1, c * word[pos].coeffs[a]);
                idx.pop_back();
            }
        };
        expand(0, Rational(1));
        return out;
    }

    /// Normal form of a basis-index word.
    UEAElement normalize_word(const PBWMonomial &word)
    {
        if (std::is_sorted(word.begin(), word.end())) {
            UEAElement e = zero();
            e.add_term(word, Rational(1));
            return e;
        }
        if (word.size() <= word_cache_max_len_) {
            auto it = word_cache_.find(word);
            if (it != word_cache_.end()) return it->second;
            UEAElement e = straighten(word);
            word_cache_.emplace(word, e);
            return e;
        }
        return straighten(word);
    }

    /// Product in U(g): concatenate and straighten.
    UEAElement mul(const UEAElement &a, const UEAElement &b)
    {
        UEAElement out = zero();
        for (const auto &[ma, ca] : a.terms)
            for (const auto &[mb, cb] : b.terms) {
                PBWMonomial w = ma;
                w.insert(w.end(), mb.begin(), mb.end());
                add_scaled(out, normalize_word(w), ca * cb);
            }
        return out;
    }

    /// Symmetrized product: the average of the normal forms over all
    /// orderings of the factors. Computed by grouping the k! sum by first
    /// factor, which only needs one multiset per suffix.
    UEAElement sym_product(std::span<const LieVector> factors)
    {
        if (factors.empty()) return one();
        std::map<PBWMonomial, Rational> multiset_coeffs;
        PBWMonomial idx;
        std::function<void(size_t, Rational)> expand = [&](size_t pos, Rational c) {
            if (pos == factors.size()) {
                PBWMonomial key = idx;
                std::sort(key.begin(), key.end());
                auto [it, inserted] = multiset_coeffs.emplace(std::move(key), c);
                if (!inserted) it->second += c;
                return;
            }
            check_vector(factors[pos]);
            for (int a = 0; a < alg_.dim(); ++a) {
                if (factors[pos].coeffs[a].is_zero()) continue;
                idx.push_back(uint16_t(a));
                expand(pos + 1, c * factors[pos].coeffs[a]);
                idx.pop_back();
            }
        };
        expand(0, Rational(1));

        UEAElement out = zero();
        for (const auto &[ms, c] : multiset_coeffs)
            if (!c.is_zero()) add_scaled(out, sym_word(ms), c);
        return out;
    }

    /// Symmetrized product of the basis letters of a sorted multiset.
    UEAElement sym_word(const PBWMonomial &multiset)
    {
        if (multiset.empty()) return one();
        const bool cache = multiset.size() <= sym_cache_max_len_;
        if (cache) {
            auto it = sym_cache_.find(multiset);
            if (it != sym_cache_.end()) return it->second;
        }
        UEAElement out = zero();
        if (multiset.size() == 1) {
            out.add_term(multiset, Rational(1));
        } else {
            // (1/k) sum over the choice of first factor.
            const Rational inv_k(1, static_cast<long long>(multiset.size()));
            for (size_t t = 0; t < multiset.size(); ++t) {
                if (t > 0 && multiset[t] == multiset[t - 1]) continue;
                int mult = 1;
                for (size_t u = t + 1; u < multiset.size() && multiset[u] == multiset[t]; ++u)
                    ++mult;
                PBWMonomial rest;
                rest.reserve(multiset.size() - 1);
                rest.insert(rest.end(), multiset.begin(), multiset.begin() + t);
                rest.insert(rest.end(), multiset.begin() + t + 1, multiset.end());
                UEAElement tail = sym_word(rest);
                add_scaled(out, mul_basis_left(multiset[t], tail), inv_k * Rational(mult));
            }
        }
        if (cache) sym_cache_.emplace(multiset, out);
        return out;
    }

    /// x_t * element, straightened.
    UEAElement mul_basis_left(uint16_t t, const UEAElement &e)
    {
        UEAElement out = zero();
        for (const auto &[m, c] : e.terms) {
            PBWMonomial w;
            w.reserve(m.size() + 1);
            w.push_back(t);
            w.insert(w.end(), m.begin(), m.end());
            add_scaled(out, normalize_word(w), c);
        }
        return out;
    }

    /// Linear extension of m[i,j] -> L_{ij} with symmetrized products.
    UEAElement symmetrize_poly(const MPolynomial &p, const LMatrix &L)
    {
        if (L.algebra != &alg_)
            throw std::invalid_argument("symmetrize_poly: L matrix belongs to another algebra");
        const int N = alg_.rep_dim();
        UEAElement out = zero();
        for (const auto &[mono, c] : p.terms()) {
            std::vector<LieVector> factors;
            factors.reserve(mono.size());
            bool dead = false;
            for (VarId v : mono) {
                if (var_is_lambda(v) || var_mat(v) != 0)
                    throw std::invalid_argument("symmetrize_poly: foreign variable " + var_name(v));
                const int i = var_row(v), j = var_col(v);
                if (i < 1 || i > N || j < 1 || j > N)
                    throw std::invalid_argument("symmetrize_poly: variable index out of range");
                LieVector f = L.at(i - 1, j - 1);
                if (f.is_zero()) {
                    dead = true;
                    break;
                }
                factors.push_back(std::move(f));
            }
            if (dead) continue;
            add_scaled(out, sym_product(factors), c);
        }
        return out;
    }

    /// [g, T] in PBW form.
    UEAElement commutator(const LieVector &g, const UEAElement &T)
    {
        check_vector(g);
        std::vector<LieVector> gb(alg_.dim(), LieVector(alg_.dim()));
        for (int b = 0; b < alg_.dim(); ++b) gb[b] = alg_.bracket(g, alg_.basis_vec(b));
        UEAElement out = zero();
        for (const auto &[m, c] : T.terms) {
            for (size_t t = 0; t < m.size(); ++t) {
                const LieVector &img = gb[m[t]];
                for (int a = 0; a < alg_.dim(); ++a) {
                    if (img.coeffs[a].is_zero()) continue;
                    PBWMonomial w = m;
                    w[t] = uint16_t(a);
                    add_scaled(out, normalize_word(w), c * img.coeffs[a]);
                }
            }
        }
        return out;
    }

    /// T is central iff [v_a, T] = 0 for all basis generators (ad is linear
    /// and a derivation, so generators suffice).
    CentralityVerdict is_central(const UEAElement &T, int threads = 1)
    {
        const int d = alg_.dim();
        CentralityVerdict v;
        if (threads <= 1) {
            for (int a = 0; a < d; ++a) {
                UEAElement r = commutator(alg_.basis_vec(a), T);
                if (!r.is_zero()) {
                    v.central = false;
                    v.witness_generator = a;
                    v.witness_residual = std::move(r);
                    return v;
                }
            }
            return v;
        }
        std::vector<std::optional<UEAElement>> residuals(d);
        parallel_chunks(d, threads, [&](size_t begin, size_t end, size_t) {
            Enveloping worker(alg_, word_cache_max_len_, sym_cache_max_len_);
            for (size_t a = begin; a < end; ++a) {
                UEAElement r = worker.commutator(alg_.basis_vec(int(a)), T);
                if (!r.is_zero()) residuals[a] = std::move(r);
            }
        });
        for (int a = 0; a < d; ++a)
            if (residuals[a]) {
                v.central = false;
                v.witness_generator = a;
                v.witness_residual = std::move(*residuals[a]);
                break;
            }
        return v;
    }

    /// The substitution m[i,j] -> L_{ij} intertwines the derivation action
    /// on polynomials with minus the adjoint action: symmetrizing act(g, p)
    /// equals -[g, symmetrize(p)]. (The polynomial action pushes vectors
    /// forward while ad acts on functions, hence the sign.) The verdict
    /// asserts action_image + adjoint_image = 0.
    EquivarianceVerdict equivariance_check(const MPolynomial &p, const LieVector &g,
                                           const LMatrix &L)
    {
        if (!(alg_.is_so() || alg_.is_g2()))
            throw std::invalid_argument(
                "equivariance_check: defined for the skew families (so_N, g2)");
        EquivarianceVerdict v;
        v.action_image = symmetrize_poly(act(alg_, g, p), L);
        v.adjoint_image = commutator(g, symmetrize_poly(p, L));
        v.residual = v.action_image + v.adjoint_image;
        v.holds = v.residual.is_zero();
        return v;
    }

  private:
    void check_vector(const LieVector &v) const
    {
        if (v.dim() != alg_.dim())
            throw std::invalid_argument("Enveloping: vector over a different algebra");
    }

    static void add_scaled(UEAElement &dst, const UEAElement &src, const Rational &c)
    {
        if (c.is_zero()) return;
        for (const auto &[m, v] : src.terms) dst.add_term(m, v * c);
    }

    void expand_vectors(std::span<const LieVector> word, size_t pos, PBWMonomial idx, Rational c,
                        UEAElement &out, bool leftmost)
    {
        if (pos == word.size()) {
            add_scaled(out, normalize_word(idx), c);
            return;
        }
        check_vector(word[pos]);
        for (int a = 0; a < alg_.dim(); ++a) {
            if (word[pos].coeffs[a].is_zero()) continue;
            idx.push_back(uint16_t(a));
            expand_vectors(word, pos + 1, idx, c * word[pos].coeffs[a], out, leftmost);
            idx.pop_back();
        }
    }

    /// Work-stack straightening, rightmost inversion first.
    UEAElement straighten(const PBWMonomial &start) const
    {
        UEAElement out = zero();
        std::vector<std::pair<PBWMonomial, Rational>> stack;
        stack.emplace_back(start, Rational(1));
        while (!stack.empty()) {
            auto [w, c] = std::move(stack.back());
            stack.pop_back();
            int inv = -1;
            for (int t = int(w.size()) - 2; t >= 0; --t)
                if (w[t] > w[t + 1]) {
                    inv = t;
                    break;
                }
            if (inv < 0) {
                out.add_term(std::move(w), c);
                continue;
            }
            const uint16_t b = w[inv], a = w[inv + 1];
            PBWMonomial swapped = w;
            std::swap(swapped[inv], swapped[inv + 1]);
            stack.emplace_back(std::move(swapped), c);
            for (const auto &[g, coeff] : alg_.bracket_basis(b, a)) {
                PBWMonomial contracted;
                contracted.reserve(w.size() - 1);
                contracted.insert(contracted.end(), w.begin(), w.begin() + inv);
                contracted.push_back(g);
                contracted.insert(contracted.end(), w.begin() + inv + 2, w.end());
                stack.emplace_back(std::move(contracted), c * coeff);
            }
        }
        return out;
    }

    /// Leftmost-inversion recursion for the oracle path.
    void brute_force_word(const PBWMonomial &w, const Rational &c, UEAElement &out) const
    {
        int inv = -1;
        for (size_t t = 0; t + 1 < w.size(); ++t)
            if (w[t] > w[t + 1]) {
                inv = int(t);
                break;
            }
        if (inv < 0) {
            out.add_term(w, c);
            return;
        }
        PBWMonomial swapped = w;
        std::swap(swapped[inv], swapped[inv + 1]);
        brute_force_word(swapped, c, out);
        for (const auto &[g, coeff] : alg_.bracket_basis(w[inv], w[inv + 1])) {
            PBWMonomial contracted;
            contracted.reserve(w.size() - 1);
            contracted.insert(contracted.end(), w.begin(), w.begin() + inv);
            contracted.push_back(g);
            contracted.insert(contracted.end(), w.begin() + inv + 2, w.end());
            brute_force_word(contracted, c * coeff, out);
        }
    }

    const LieAlgebra &alg_;
    size_t word_cache_max_len_;
    size_t sym_cache_max_len_;
    std::map<PBWMonomial, UEAElement> word_cache_;
    std::map<PBWMonomial, UEAElement> sym_cache_;
};

} // namespace cea
