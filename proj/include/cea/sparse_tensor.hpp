#pragma once

#include "cea/combinatorics.hpp"
#include "cea/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace cea {

/// Sparse tensor of fixed order with exact rational entries. Multi-indices
/// are 0-based; zero entries are never stored.
class SparseTensor {
  public:
    using Index = std::vector<int>;
    using EntryMap = std::map<Index, Rational>;

    explicit SparseTensor(std::vector<int> dims) : dims_(std::move(dims))
    {
        for (int d : dims_)
            if (d <= 0) throw std::invalid_argument("SparseTensor: dims must be positive");
    }

    int order() const { return static_cast<int>(dims_.size()); }
    const std::vector<int> &dims() const { return dims_; }
    const EntryMap &entries() const { return entries_; }
    size_t nonzero_count() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Rational at(const Index &idx) const
    {
        check_index(idx);
        auto it = entries_.find(idx);
        return it == entries_.end() ? Rational(0) : it->second;
    }

    void set(const Index &idx, Rational value)
    {
        check_index(idx);
        if (value.is_zero())
            entries_.erase(idx);
        else
            entries_[idx] = std::move(value);
    }

    void add(const Index &idx, const Rational &value)
    {
        check_index(idx);
        if (value.is_zero()) return;
        auto [it, inserted] = entries_.emplace(idx, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    SparseTensor scaled(const Rational &c) const
    {
        SparseTensor out(dims_);
        if (c.is_zero()) return out;
        for (const auto &[idx, v] : entries_) out.entries_[idx] = v * c;
        return out;
    }

    friend bool operator==(const SparseTensor &a, const SparseTensor &b)
    {
        return a.dims_ == b.dims_ && a.entries_ == b.entries_;
    }

  private:
    void check_index(const Index &idx) const
    {
        if (idx.size() != dims_.size())
            throw std::invalid_argument("SparseTensor: index order mismatch");
        for (size_t a = 0; a < idx.size(); ++a)
            if (idx[a] < 0 || idx[a] >= dims_[a])
                throw std::out_of_range("SparseTensor: index out of range");
    }

    std::vector<int> dims_;
    EntryMap entries_;
};

/// Alternating projector over the named axes: (1/k!) sum over the k! axis
/// permutations with signs. All named axes must share one dimension.
inline SparseTensor antisymmetrize(const SparseTensor &t, const std::vector<int> &axes)
{
    const int k = static_cast<int>(axes.size());
    if (k == 0) return t;
    int dim = -1;
    for (int a : axes) {
        if (a < 0 || a >= t.order()) throw std::invalid_argument("antisymmetrize: bad axis");
        if (dim == -1)
            dim = t.dims()[a];
        else if (t.dims()[a] != dim)
            throw std::invalid_argument("antisymmetrize: axis dimension mismatch");
    }
    SparseTensor out(t.dims());
    const Rational inv_kfact = Rational(1) / factorial(k);
    for_each_signed_permutation(k, [&](const std::vector<int> &perm, int sign) {
        for (const auto &[idx, v] : t.entries()) {
            SparseTensor::Index moved = idx;
            for (int a = 0; a < k; ++a) moved[axes[a]] = idx[axes[perm[a]]];
            out.add(moved, v * inv_kfact * Rational(sign));
        }
    });
    return out;
}

/// Contracts pairs of axes (axis in a, axis in b); result axes are the
/// remaining axes of a followed by the remaining axes of b.
inline SparseTensor contract(const SparseTensor &a, const SparseTensor &b,
                             const std::vector<std::pair<int, int>> &axis_pairs)
{
    std::vector<bool> used_a(a.order(), false), used_b(b.order(), false);
    for (auto [pa, pb] : axis_pairs) {
        if (pa < 0 || pa >= a.order() || pb < 0 || pb >= b.order())
            throw std::invalid_argument("contract: bad axis");
        if (a.dims()[pa] != b.dims()[pb])
            throw std::invalid_argument("contract: axis dimension mismatch");
        if (used_a[pa] || used_b[pb]) throw std::invalid_argument("contract: repeated axis");
        used_a[pa] = used_b[pb] = true;
    }
    std::vector<int> keep_a, keep_b, out_dims;
    for (int i = 0; i < a.order(); ++i)
        if (!used_a[i]) {
            keep_a.push_back(i);
            out_dims.push_back(a.dims()[i]);
        }
    for (int i = 0; i < b.order(); ++i)
        if (!used_b[i]) {
            keep_b.push_back(i);
            out_dims.push_back(b.dims()[i]);
        }
    if (out_dims.empty()) out_dims.push_back(1); // scalar result lives in a 1-dim slot

    const bool scalar = keep_a.empty() && keep_b.empty();
    SparseTensor out(out_dims);
    for (const auto &[ia, va] : a.entries()) {
        for (const auto &[ib, vb] : b.entries()) {
            bool match = true;
            for (auto [pa, pb] : axis_pairs)
                if (ia[pa] != ib[pb]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            SparseTensor::Index idx;
            if (scalar)
                idx.push_back(0);
            else {
                idx.reserve(keep_a.size() + keep_b.size());
                for (int p : keep_a) idx.push_back(ia[p]);
                for (int p : keep_b) idx.push_back(ib[p]);
            }
            out.add(idx, va * vb);
        }
    }
    return out;
}

} // namespace cea
