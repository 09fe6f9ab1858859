#pragma once

#include "cea/octonion.hpp"
#include "cea/sparse_tensor.hpp"

#include <stdexcept>

namespace cea {

/// Antisymmetric tensor over the 7 imaginary octonion indices (0-based:
/// axis value v stands for e_{v+1}). `scale` is the magnitude divided out
/// to bring the nonzero entries to +-1.
struct OmegaTensor {
    int order;
    SparseTensor entries;
    Rational scale; // pre-normalization magnitude; 1 when nothing was rescaled

    OmegaTensor(int k, SparseTensor t, Rational s)
        : order(k), entries(std::move(t)), scale(std::move(s))
    {
    }
};

/// Octonion structure constants: e_i e_j = -delta_ij + sum_k omega3[i,j,k] e_k.
/// 42 signed entries (7 oriented lines, 6 index orders each).
inline OmegaTensor omega3()
{
    SparseTensor t(std::vector<int>{7, 7, 7});
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            auto cell = OctonionTable::instance().cell(i + 1, j + 1);
            if (cell.unit >= 1) t.set({i, j, cell.unit - 1}, Rational(cell.sign));
        }
    return OmegaTensor(3, std::move(t), Rational(1));
}

namespace detail {

/// Real part of the left-associated basis product e_{i1} ... e_{ik},
/// with 0-based imaginary indices. Basis products stay basis elements up
/// to sign, so only a (sign, unit) pair is threaded through the table.
inline int chain_real(const std::vector<int> &idx)
{
    const OctonionTable &t = OctonionTable::instance();
    int sign = 1, unit = idx[0] + 1;
    for (size_t a = 1; a < idx.size(); ++a) {
        auto cell = t.cell(unit, idx[a] + 1);
        sign *= cell.sign;
        unit = cell.unit;
    }
    return unit == 0 ? sign : 0;
}

} // namespace detail

/// Real part of the left-associated basis product e_{i1} e_{i2} ... e_{ik},
/// as a dense-in-principle tensor stored sparsely. For k=2 this is -delta.
inline SparseTensor omega_chain(int k)
{
    if (k < 2 || k > 7) throw std::invalid_argument("omega_chain: order must be in 2..7");
    SparseTensor t(std::vector<int>(k, 7));
    std::vector<int> idx(k, 0);
    while (true) {
        int re = detail::chain_real(idx);
        if (re != 0) t.set(idx, Rational(re));
        int a = k - 1;
        while (a >= 0 && idx[a] == 6) idx[a--] = 0;
        if (a < 0) break;
        ++idx[a];
    }
    return t;
}

/// Antisymmetrized chain tensor rescaled to entries in {+1,-1,0}. Orders 5
/// and 6 vanish identically; order 7 is the total alternator up to sign.
/// Order 2 is routed to the unscaled chain tensor -delta (the order-2
/// contraction is not alternating, it is the metric).
///
/// Entries with a repeated index die under alternation and permuting axis
/// values never mixes index multisets, so only distinct sorted index sets
/// need the signed average; each set then populates its k! positions.
inline OmegaTensor omega_skew(int k)
{
    if (k < 2 || k > 7) throw std::invalid_argument("omega_skew: order must be in 2..7");
    if (k == 2) return OmegaTensor(2, omega_chain(2), Rational(1));
    SparseTensor skew(std::vector<int>(k, 7));
    const Rational inv_kfact = Rational(1) / factorial(k);
    for_each_subset(7, k, [&](const std::vector<int> &s) {
        Rational alpha;
        for_each_signed_permutation(k, [&](const std::vector<int> &perm, int sign) {
            std::vector<int> idx(k);
            for (int a = 0; a < k; ++a) idx[a] = s[perm[a]];
            alpha += Rational(sign * detail::chain_real(idx));
        });
        alpha *= inv_kfact;
        if (alpha.is_zero()) return;
        for_each_signed_permutation(k, [&](const std::vector<int> &perm, int sign) {
            std::vector<int> idx(k);
            for (int a = 0; a < k; ++a) idx[a] = s[perm[a]];
            skew.set(idx, alpha * Rational(sign));
        });
    });
    if (skew.is_zero()) return OmegaTensor(k, std::move(skew), Rational(1));
    // All nonzero magnitudes must agree; divide the common scale out.
    Rational mag;
    bool first = true;
    for (const auto &[idx, v] : skew.entries()) {
        Rational m = v.sign() < 0 ? -v : v;
        if (first) {
            mag = m;
            first = false;
        } else if (m != mag) {
            throw std::logic_error("omega_skew: nonuniform entry magnitudes");
        }
    }
    SparseTensor normalized = skew.scaled(Rational(1) / mag);
    return OmegaTensor(k, std::move(normalized), mag);
}

} // namespace cea
