#pragma once

#include "cea/rational.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cea {

/// A permutation of {0,...,n-1}, stored as its image sequence.
class Permutation {
  public:
    explicit Permutation(std::vector<int> image) : image_(std::move(image))
    {
        std::vector<bool> seen(image_.size(), false);
        for (int v : image_) {
            if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
                throw std::invalid_argument("Permutation: image is not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i]; }
    const std::vector<int> &image() const { return image_; }

    /// Parity: +1 for even, -1 for odd (by inversion count).
    int sign() const
    {
        int inv = 0;
        for (size_t i = 0; i < image_.size(); ++i)
            for (size_t j = i + 1; j < image_.size(); ++j)
                if (image_[i] > image_[j]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }

    friend bool operator==(const Permutation &a, const Permutation &b)
    {
        return a.image_ == b.image_;
    }

  private:
    std::vector<int> image_;
};

/// Visits all n! permutations of {0..n-1} in lexicographic order together
/// with their signs.
inline void for_each_signed_permutation(int n, const std::function<void(const std::vector<int> &, int)> &fn)
{
    if (n < 1) throw std::invalid_argument("signed_permutations: n must be positive");
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    // Lexicographic successor flips parity by the parity of the suffix
    // rotation, so the sign is recomputed from inversions; n is tiny here.
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (im[i] > im[j]) ++inv;
        fn(im, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(im.begin(), im.end()));
}

inline std::vector<std::pair<Permutation, int>> signed_permutations(int n)
{
    std::vector<std::pair<Permutation, int>> out;
    for_each_signed_permutation(n, [&](const std::vector<int> &im, int sign) {
        out.emplace_back(Permutation(im), sign);
    });
    return out;
}

/// Visits all C(n,k) size-k subsets of {0..n-1} in lexicographic order; each
/// subset is delivered sorted.
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int> &)> &fn)
{
    if (k < 0 || k > n) throw std::invalid_argument("subsets: need 0 <= k <= n");
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        fn(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

inline std::vector<std::vector<int>> subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    for_each_subset(n, k, [&](const std::vector<int> &s) { out.push_back(s); });
    return out;
}

/// One perfect matching of an index set: pairs (p,q) with p<q, sorted by p.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int sign = 1;
};

namespace detail {

inline int flat_sign(const std::vector<std::pair<int, int>> &pairs, const std::vector<int> &sorted)
{
    // Sign of the word p1 q1 p2 q2 ... as a permutation of the sorted set.
    std::vector<int> word;
    word.reserve(sorted.size());
    for (auto [p, q] : pairs) {
        word.push_back(p);
        word.push_back(q);
    }
    int inv = 0;
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = i + 1; j < word.size(); ++j) {
            auto ri = std::lower_bound(sorted.begin(), sorted.end(), word[i]) - sorted.begin();
            auto rj = std::lower_bound(sorted.begin(), sorted.end(), word[j]) - sorted.begin();
            if (ri > rj) ++inv;
        }
    return inv % 2 == 0 ? 1 : -1;
}

inline void matchings_rec(std::vector<int> &rest, std::vector<std::pair<int, int>> &acc,
                          const std::vector<int> &sorted,
                          const std::function<void(const Matching &)> &fn)
{
    if (rest.empty()) {
        Matching m;
        m.pairs = acc;
        m.sign = flat_sign(acc, sorted);
        fn(m);
        return;
    }
    const int p = rest.front();
    for (size_t t = 1; t < rest.size(); ++t) {
        const int q = rest[t];
        std::vector<int> next;
        next.reserve(rest.size() - 2);
        for (size_t u = 1; u < rest.size(); ++u)
            if (u != t) next.push_back(rest[u]);
        acc.emplace_back(p, q);
        matchings_rec(next, acc, sorted, fn);
        acc.pop_back();
    }
}

} // namespace detail

/// Visits all (2m-1)!! perfect matchings of an even-size index set. The sign
/// is the parity of the flattened word (p1,q1,...,pm,qm) relative to the
/// sorted set; pairs are normalized p_i < q_i with p_1 < p_2 < ...
inline void for_each_perfect_matching(std::vector<int> indices, const std::function<void(const Matching &)> &fn)
{
    if (indices.size() % 2 != 0)
        throw std::invalid_argument("perfect_matchings: index set must have even size");
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw std::invalid_argument("perfect_matchings: repeated index");
    if (indices.empty()) {
        fn(Matching{});
        return;
    }
    std::vector<std::pair<int, int>> acc;
    detail::matchings_rec(indices, acc, indices, fn);
}

inline std::vector<Matching> perfect_matchings(const std::vector<int> &indices)
{
    std::vector<Matching> out;
    for_each_perfect_matching(indices, [&](const Matching &m) { out.push_back(m); });
    return out;
}

} // namespace cea
