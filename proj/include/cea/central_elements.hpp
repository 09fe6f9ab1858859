#pragma once

#include "cea/invariants.hpp"
#include "cea/lie_algebra.hpp"
#include "cea/uea.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

namespace cea {

/// Outcome of building one named central-element candidate and checking it.
struct CentralElementReport {
    std::string family;
    std::string algebra;
    int k = 0;
    bool full = false;
    std::vector<int> row_partition;
    std::vector<int> col_partition;

    UEAElement element;
    CentralityVerdict centrality;

    Rational normalization = Rational(1); // recorded constant, unit unless noted
    std::vector<int> vanishing_parts;     // omega orders that killed the sum
    size_t source_poly_terms = 0;
    double wall_ms = 0;
};

namespace detail {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

/// Degree-2 central element: sum of squared generators. For so_N this is
/// the k=1 pfaffian-square sum; for g2 the order-2 omega contraction.
inline CentralElementReport casimir(Enveloping &env, const LMatrix &L, int threads = 1)
{
    const LieAlgebra &alg = env.algebra();
    if (!(alg.is_so() || alg.is_g2()))
        throw std::invalid_argument("casimir: defined for so_N and g2");
    detail::Stopwatch sw;
    CentralElementReport r;
    r.family = "casimir";
    r.algebra = alg.name();
    MPolynomial p = alg.is_so() ? sum_pf_sq_poly(alg.rep_dim(), 1)
                                : g_poly({2}, {2}, nullptr, threads);
    r.source_poly_terms = p.term_count();
    r.element = env.symmetrize_poly(p, L);
    r.centrality = env.is_central(r.element, threads);
    r.wall_ms = sw.ms();
    return r;
}

/// C_k = symmetrized sum of the k x k minors of L (signed double
/// determinants after symmetrization).
inline CentralElementReport det_family(Enveloping &env, const LMatrix &L, int k, int threads = 1)
{
    const LieAlgebra &alg = env.algebra();
    if (!(alg.is_gl() || alg.is_so()))
        throw std::invalid_argument("det_family: defined for gl_N and so_N");
    const int N = alg.rep_dim();
    if (k < 2 || k > N) throw std::invalid_argument("det_family: need 2 <= k <= N");
    detail::Stopwatch sw;
    CentralElementReport r;
    r.family = "det";
    r.algebra = alg.name();
    r.k = k;
    MPolynomial p = c_k_poly(N, k);
    r.source_poly_terms = p.term_count();
    r.element = env.symmetrize_poly(p, L);
    r.centrality = env.is_central(r.element, threads);
    r.wall_ms = sw.ms();
    return r;
}

/// Pfaffian families over so_N: the size-2k pfaffian-square sum, or the
/// full pfaffian when N is even.
inline CentralElementReport pfaffian_family(Enveloping &env, const LMatrix &L, int k, bool full,
                                            int threads = 1)
{
    const LieAlgebra &alg = env.algebra();
    if (!alg.is_so()) throw std::invalid_argument("pfaffian_family: defined for so_N");
    const int N = alg.rep_dim();
    detail::Stopwatch sw;
    CentralElementReport r;
    r.algebra = alg.name();
    MPolynomial p;
    if (full) {
        if (N % 2 != 0) throw std::invalid_argument("pfaffian_family: full Pf needs even N");
        r.family = "pf";
        r.full = true;
        p = pf_full_poly(N);
    } else {
        if (k < 1 || 2 * k > N)
            throw std::invalid_argument("pfaffian_family: need 1 <= k <= N/2");
        r.family = "sumpf2";
        r.k = k;
        p = sum_pf_sq_poly(N, k);
    }
    r.source_poly_terms = p.term_count();
    r.element = env.symmetrize_poly(p, L);
    r.centrality = env.is_central(r.element, threads);
    r.wall_ms = sw.ms();
    return r;
}

/// Symmetrized omega-contraction element of g2 for the given row and column
/// partitions. Row parts contract row indices and column parts contract
/// column indices, so no part ever holds both indices of one factor.
inline CentralElementReport g2_G(Enveloping &env, const LMatrix &L, const std::vector<int> &rows,
                                 const std::vector<int> &cols, int threads = 1)
{
    const LieAlgebra &alg = env.algebra();
    if (!alg.is_g2()) throw std::invalid_argument("g2_G: defined for g2");
    detail::Stopwatch sw;
    CentralElementReport r;
    r.family = "g2G";
    r.algebra = alg.name();
    r.row_partition = rows;
    r.col_partition = cols;
    GPolyInfo info;
    MPolynomial p = g_poly(rows, cols, &info, threads);
    r.vanishing_parts = info.vanishing_parts;
    r.source_poly_terms = p.term_count();
    r.element = env.symmetrize_poly(p, L);
    r.centrality = env.is_central(r.element, threads);
    r.wall_ms = sw.ms();
    return r;
}

/// Report for the degree-7 g2 checks.
struct G2DetReport {
    // polynomial route
    Rational ratio;                  // g_poly([7],[7]) / det as general polynomials
    bool proportional = false;       // exact equality at that ratio
    bool det_invariant = false;      // det passes the g2 invariance check
    bool skew_g_vanishes = false;    // g_poly([7],[7]) under the skew pattern
    bool skew_det_vanishes = false;  // det under the skew pattern
    // spot route (optional)
    bool spot_ran = false;
    size_t element_terms = 0;
    int spot_generators = 0;
    bool spot_commutators_vanish = false;
    double wall_ms = 0;
};

/// Polynomial route: g_poly([7],[7]) is an exact rational multiple of the
/// 7 x 7 determinant polynomial, and that determinant is g2-invariant.
/// Under the skew pattern both sides vanish identically (odd skew
/// determinants are zero), which is why the symmetrized degree-7 element
/// collapses; the spot route builds it anyway and commutes generators
/// against it.
inline G2DetReport g2_det_check(Enveloping &env, const LMatrix &L, bool spot,
                                int spot_generators = 2, int threads = 1)
{
    const LieAlgebra &alg = env.algebra();
    if (!alg.is_g2()) throw std::invalid_argument("g2_det_check: defined for g2");
    detail::Stopwatch sw;
    G2DetReport r;

    MPolynomial g7 = g_poly({7}, {7}, nullptr, threads);
    MPolynomial d7 = det_poly(index_range(7), index_range(7));
    if (!g7.is_zero() && !d7.is_zero()) {
        const auto &[mono, c] = *d7.terms().begin();
        r.ratio = g7.coeff(mono) / c;
        r.proportional = !r.ratio.is_zero() && g7 == d7.scaled(r.ratio);
    }
    r.det_invariant =
        is_invariant(alg, d7, VariablePattern::general, threads).invariant;
    r.skew_g_vanishes = g7.skew_substituted().is_zero();
    r.skew_det_vanishes = d7.skew_substituted().is_zero();

    if (spot) {
        r.spot_ran = true;
        r.spot_generators = spot_generators;
        UEAElement elem = env.symmetrize_poly(g7, L);
        r.element_terms = elem.term_count();
        bool ok = true;
        for (int a = 0; a < spot_generators && a < alg.dim(); ++a)
            ok = ok && env.commutator(alg.basis_vec(a), elem).is_zero();
        r.spot_commutators_vanish = ok;
    }
    r.wall_ms = sw.ms();
    return r;
}

} // namespace cea
