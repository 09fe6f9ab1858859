#pragma once

#include "cea/combinatorics.hpp"
#include "cea/lie_algebra.hpp"
#include "cea/mpolynomial.hpp"
#include "cea/omega.hpp"
#include "cea/parallel.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cea {

/// The derivation action of an algebra element on the matrix variables:
/// M -> VM + MV^t, i.e. m[i,j] -> sum_k V[i,k] m[k,j] + sum_k V[j,k] m[i,k],
/// extended to polynomials by the Leibniz rule. Variables of other matrix
/// symbols and the scalar are treated as constants.
inline MPolynomial act(const LieAlgebra &alg, const LieVector &g, const MPolynomial &p)
{
    const int N = alg.rep_dim();
    if (p.max_index() > N)
        throw std::invalid_argument("act: polynomial uses indices beyond the representation");
    const RatMatrix V = alg.rep_of(g);

    // Image of one variable under the derivation, as (coeff, var) pairs.
    auto image = [&](VarId v) {
        std::vector<std::pair<Rational, VarId>> img;
        if (var_is_lambda(v) || var_mat(v) != 0) return img;
        const int i = var_row(v), j = var_col(v);
        for (int k = 1; k <= N; ++k) {
            if (!V.at(i - 1, k - 1).is_zero()) img.emplace_back(V.at(i - 1, k - 1), var_m(k, j));
            if (!V.at(j - 1, k - 1).is_zero()) img.emplace_back(V.at(j - 1, k - 1), var_m(i, k));
        }
        return img;
    };

    MPolynomial out;
    for (const auto &[mono, c] : p.terms()) {
        for (size_t t = 0; t < mono.size(); ++t) {
            if (t > 0 && mono[t] == mono[t - 1]) continue; // one Leibniz term per distinct var
            int exponent = 1;
            for (size_t u = t + 1; u < mono.size() && mono[u] == mono[t]; ++u) ++exponent;
            Monomial rest;
            rest.reserve(mono.size() - 1);
            rest.insert(rest.end(), mono.begin(), mono.begin() + t);
            rest.insert(rest.end(), mono.begin() + t + exponent, mono.end());
            for (int e = 1; e < exponent; ++e) rest.push_back(mono[t]);
            for (const auto &[f, w] : image(mono[t])) {
                Monomial m = rest;
                m.push_back(w);
                out.add_term(std::move(m), c * f * Rational(exponent));
            }
        }
    }
    return out;
}

enum class VariablePattern { automatic, general, skew };

struct InvarianceVerdict {
    bool invariant = true;
    int witness_generator = -1; // basis index of the first failing generator
    MPolynomial witness_residual;
};

/// Checks act(alg, v_a, p) = 0 for every basis element. Under the skew
/// pattern the residual is reduced by m[j,i] -> -m[i,j], m[i,i] -> 0 first;
/// the pattern is inferred from the variables unless forced.
inline InvarianceVerdict is_invariant(const LieAlgebra &alg, const MPolynomial &p,
                                      VariablePattern pattern = VariablePattern::automatic,
                                      int threads = 1)
{
    const bool skew = pattern == VariablePattern::skew ||
                      (pattern == VariablePattern::automatic && !p.is_zero() &&
                       p.uses_only_upper_triangle());
    const int d = alg.dim();
    std::vector<std::optional<MPolynomial>> residuals(d);
    parallel_chunks(d, threads, [&](size_t begin, size_t end, size_t) {
        for (size_t a = begin; a < end; ++a) {
            MPolynomial r = act(alg, alg.basis_vec(static_cast<int>(a)), p);
            if (skew) r = r.skew_substituted();
            if (!r.is_zero()) residuals[a] = std::move(r);
        }
    });
    InvarianceVerdict v;
    for (int a = 0; a < d; ++a)
        if (residuals[a]) {
            v.invariant = false;
            v.witness_generator = a;
            v.witness_residual = std::move(*residuals[a]);
            break;
        }
    return v;
}

inline MPolynomial trace_poly(int N)
{
    MPolynomial p;
    for (int i = 1; i <= N; ++i) p.add_term({var_m(i, i)}, Rational(1));
    return p;
}

/// Pfaffian of the skew pattern over an even index set (1-based, sorted):
/// sum over perfect matchings with signs; every variable has row < column.
inline MPolynomial pfaffian_poly(const std::vector<int> &index_set, int mat = 0)
{
    std::vector<int> idx = index_set;
    std::sort(idx.begin(), idx.end());
    if (idx.size() % 2 != 0)
        throw std::invalid_argument("pfaffian_poly: index set must have even size");
    MPolynomial p;
    for_each_perfect_matching(idx, [&](const Matching &m) {
        Monomial mono;
        mono.reserve(m.pairs.size());
        for (auto [a, b] : m.pairs) mono.push_back(var_m(a, b, mat));
        p.add_term(std::move(mono), Rational(m.sign));
    });
    return p;
}

/// Determinant of the submatrix with rows I and columns J over the general
/// variables (signed permutation sum).
inline MPolynomial det_poly(const std::vector<int> &rows, const std::vector<int> &cols, int mat = 0)
{
    if (rows.size() != cols.size())
        throw std::invalid_argument("det_poly: row and column sets must have equal size");
    std::vector<int> I = rows, J = cols;
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    const int k = static_cast<int>(I.size());
    MPolynomial p;
    if (k == 0) return MPolynomial::constant(Rational(1));
    for_each_signed_permutation(k, [&](const std::vector<int> &perm, int sign) {
        Monomial mono;
        mono.reserve(k);
        for (int t = 0; t < k; ++t) mono.push_back(var_m(I[t], J[perm[t]], mat));
        p.add_term(std::move(mono), Rational(sign));
    });
    return p;
}

inline std::vector<int> index_range(int N)
{
    std::vector<int> r(N);
    for (int i = 0; i < N; ++i) r[i] = i + 1;
    return r;
}

/// C_k = sum over size-k subsets I of det M_I.
inline MPolynomial c_k_poly(int N, int k)
{
    if (k < 1 || k > N) throw std::invalid_argument("c_k_poly: need 1 <= k <= N");
    MPolynomial p;
    for_each_subset(N, k, [&](const std::vector<int> &s) {
        std::vector<int> I(s.size());
        for (size_t t = 0; t < s.size(); ++t) I[t] = s[t] + 1;
        p += det_poly(I, I);
    });
    return p;
}

/// Sum over size-2k subsets I of (Pf M_I)^2.
inline MPolynomial sum_pf_sq_poly(int N, int k)
{
    if (k < 0 || 2 * k > N) throw std::invalid_argument("sum_pf_sq_poly: need 0 <= 2k <= N");
    if (k == 0) return MPolynomial::constant(Rational(1));
    MPolynomial p;
    for_each_subset(N, 2 * k, [&](const std::vector<int> &s) {
        std::vector<int> I(s.size());
        for (size_t t = 0; t < s.size(); ++t) I[t] = s[t] + 1;
        MPolynomial pf = pfaffian_poly(I);
        p += pf * pf;
    });
    return p;
}

inline MPolynomial pf_full_poly(int N)
{
    if (N % 2 != 0) throw std::invalid_argument("pf_full_poly: N must be even");
    return pfaffian_poly(index_range(N));
}

namespace detail {

/// Unordered set partitions of {0..k-1} with the prescribed multiset of part
/// sizes. Parts are produced sorted; the partition anchors each part on its
/// smallest unassigned element so every partition appears exactly once.
inline void set_partitions_rec(std::vector<int> remaining, std::vector<int> sizes,
                               std::vector<std::vector<int>> &acc,
                               const std::function<void(const std::vector<std::vector<int>> &)> &fn)
{
    if (remaining.empty()) {
        fn(acc);
        return;
    }
    const int anchor = remaining.front();
    std::vector<int> rest(remaining.begin() + 1, remaining.end());
    int prev_size = -1;
    for (size_t si = 0; si < sizes.size(); ++si) {
        const int s = sizes[si];
        if (s == prev_size) continue; // identical part sizes are interchangeable
        prev_size = s;
        std::vector<int> others = sizes;
        others.erase(others.begin() + si);
        // choose s-1 companions for the anchor from rest
        for_each_subset(static_cast<int>(rest.size()), s - 1, [&](const std::vector<int> &pick) {
            std::vector<int> part{anchor};
            std::vector<bool> used(rest.size(), false);
            for (int t : pick) {
                part.push_back(rest[t]);
                used[t] = true;
            }
            std::vector<int> next;
            for (size_t u = 0; u < rest.size(); ++u)
                if (!used[u]) next.push_back(rest[u]);
            acc.push_back(part);
            set_partitions_rec(next, others, acc, fn);
            acc.pop_back();
        });
    }
}

inline void for_each_set_partition(int k, std::vector<int> sizes,
                                   const std::function<void(const std::vector<std::vector<int>> &)> &fn)
{
    std::sort(sizes.begin(), sizes.end());
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    std::vector<std::vector<int>> acc;
    set_partitions_rec(all, sizes, acc, fn);
}

/// All ways to assign octonion indices to the given positions through the
/// omega tensors of one side's partition, as (assignment, coefficient).
struct OmegaAssignment {
    std::vector<int> values; // 0-based octonion index per position
    Rational coeff;
};

inline void omega_assignments(const std::vector<std::vector<int>> &parts,
                              const std::vector<const SparseTensor *> &tensors, int k,
                              const std::function<void(const std::vector<int> &, const Rational &)> &fn)
{
    std::vector<int> values(k, -1);
    std::function<void(size_t, Rational)> rec = [&](size_t pi, Rational c) {
        if (pi == parts.size()) {
            fn(values, c);
            return;
        }
        for (const auto &[idx, v] : tensors[pi]->entries()) {
            for (size_t t = 0; t < parts[pi].size(); ++t) values[parts[pi][t]] = idx[t];
            rec(pi + 1, c * v);
        }
    };
    rec(0, Rational(1));
}

} // namespace detail

struct GPolyInfo {
    std::vector<int> vanishing_parts; // part sizes whose omega tensor is zero
};

/// The omega-contracted invariant: product m[i1,j1]...m[ik,jk] with the row
/// indices partitioned into parts contracted against omega tensors of the
/// part sizes, and likewise the column indices. Size-2 parts use the metric
/// -delta; sizes 5 and 6 give the zero polynomial.
inline MPolynomial g_poly(const std::vector<int> &row_parts, const std::vector<int> &col_parts,
                          GPolyInfo *info = nullptr, int threads = 1)
{
    auto total = [](const std::vector<int> &v) {
        int s = 0;
        for (int x : v) s += x;
        return s;
    };
    const int k = total(row_parts);
    if (k == 0 || k != total(col_parts))
        throw std::invalid_argument("g_poly: partitions must be nonempty with equal totals");
    for (const auto &parts : {row_parts, col_parts})
        for (int s : parts)
            if (s < 2 || s > 7)
                throw std::invalid_argument("g_poly: part sizes must be in 2..7");

    // Tensor per part size; sizes 5 and 6 vanish and kill the whole sum.
    std::vector<OmegaTensor> tensors;
    tensors.reserve(7);
    bool vanishes = false;
    for (const auto &parts : {row_parts, col_parts})
        for (int s : parts)
            if (s == 5 || s == 6) {
                vanishes = true;
                if (info) info->vanishing_parts.push_back(s);
            }
    if (vanishes) return MPolynomial();

    auto tensor_for = [](int s) { return omega_skew(s); };
    std::vector<std::optional<OmegaTensor>> by_size(8);
    for (const auto &parts : {row_parts, col_parts})
        for (int s : parts)
            if (!by_size[s]) by_size[s] = tensor_for(s);

    // Collect row-side assignments once; they are reused against every
    // column assignment.
    struct Side {
        std::vector<std::vector<int>> values;
        std::vector<Rational> coeffs;
    };
    auto collect = [&](const std::vector<int> &sizes) {
        Side side;
        detail::for_each_set_partition(k, sizes, [&](const std::vector<std::vector<int>> &parts) {
            std::vector<const SparseTensor *> ts;
            ts.reserve(parts.size());
            for (const auto &p : parts) ts.push_back(&by_size[p.size()]->entries);
            detail::omega_assignments(parts, ts, k,
                                      [&](const std::vector<int> &vals, const Rational &c) {
                                          side.values.push_back(vals);
                                          side.coeffs.push_back(c);
                                      });
        });
        return side;
    };
    const Side rows = collect(row_parts);
    const Side cols = collect(col_parts);

    std::vector<MPolyAccumulator> partial(std::max(1, threads));
    parallel_chunks(rows.values.size(), threads, [&](size_t begin, size_t end, size_t tid) {
        MPolyAccumulator &acc = partial[tid];
        Monomial mono(k);
        for (size_t r = begin; r < end; ++r) {
            const auto &iv = rows.values[r];
            for (size_t c = 0; c < cols.values.size(); ++c) {
                const auto &jv = cols.values[c];
                for (int t = 0; t < k; ++t) mono[t] = var_m(iv[t] + 1, jv[t] + 1);
                acc.add(mono, rows.coeffs[r] * cols.coeffs[c]);
            }
        }
    });
    for (size_t t = 1; t < partial.size(); ++t) partial[0].merge(std::move(partial[t]));
    return partial[0].finish();
}

} // namespace cea
