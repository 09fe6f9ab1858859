#pragma once

#include "cea/central_elements.hpp"
#include "cea/graph_invariants.hpp"
#include "cea/relations.hpp"
#include "cea/uea.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace cea {

struct SelftestResult {
    std::vector<std::pair<std::string, bool>> checks;
    bool ok = true;

    void record(const std::string &name, bool passed)
    {
        checks.emplace_back(name, passed);
        ok = ok && passed;
    }
};

namespace detail {

/// Deterministic small-integer stream (independent of the standard
/// library's distribution implementations).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next()
    {
        // splitmix64
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return int(next() % uint64_t(n)); }
    Rational small_rational() { return Rational(below(9) - 4); }

  private:
    uint64_t state_;
};

inline MPolynomial random_poly(Rng &rng, int N, int max_degree, int terms)
{
    MPolynomial p;
    for (int t = 0; t < terms; ++t) {
        const int deg = 1 + rng.below(max_degree);
        Monomial m;
        for (int u = 0; u < deg; ++u) m.push_back(var_m(1 + rng.below(N), 1 + rng.below(N)));
        p.add_term(std::move(m), rng.small_rational());
    }
    return p;
}

inline LieVector random_vector(Rng &rng, int dim)
{
    LieVector v(dim);
    const int nonzeros = 1 + rng.below(3);
    for (int t = 0; t < nonzeros; ++t) v.coeffs[rng.below(dim)] += rng.small_rational();
    return v;
}

} // namespace detail

/// Fast end-to-end suite: structure soundness, octonion laws, invariance,
/// relations, PBW oracle agreement and small centrality checks.
inline SelftestResult run_selftest(uint64_t seed = 20240601, int threads = 1,
                                   std::ostream *progress = nullptr)
{
    SelftestResult res;
    auto note = [&](const std::string &name, bool passed) {
        res.record(name, passed);
        if (progress) *progress << (passed ? "ok   " : "FAIL ") << name << "\n";
    };

    auto gl2 = LieAlgebra::make_gl(2);
    auto so3 = LieAlgebra::make_so(3);
    auto so4 = LieAlgebra::make_so(4);
    auto g2 = LieAlgebra::make_g2();
    note("structure gl2", gl2.jacobi_holds() && gl2.representation_property_holds());
    note("structure so3/so4", so3.jacobi_holds() && so4.jacobi_holds() &&
                                  so4.representation_property_holds());
    note("structure g2 (dim 14)",
         g2.dim() == 14 && g2.jacobi_holds() && g2.representation_property_holds());

    bool oct = true;
    for (int i = 0; i <= 7 && oct; ++i)
        for (int j = 0; j <= 7 && oct; ++j) {
            const Octonion a = Octonion::unit(i), b = Octonion::unit(j);
            oct = oct && oct_mul(oct_mul(a, a), b) == oct_mul(a, oct_mul(a, b));
            oct = oct && oct_mul(a, b).norm() == a.norm() * b.norm();
        }
    note("octonion alternativity and norm", oct);
    note("omega3 has 42 entries", omega3().entries.nonzero_count() == 42);
    note("omega5/omega6 vanish",
         omega_skew(5).entries.is_zero() && omega_skew(6).entries.is_zero());

    const LMatrix Lg2 = build_L(g2);
    note("g2 omega relation", Lg2.relations_hold());

    note("trace invariant over so4", is_invariant(so4, trace_poly(4)).invariant);
    note("pfaffian invariant over so4",
         is_invariant(so4, pf_full_poly(4), VariablePattern::automatic, threads).invariant);
    note("casimir polynomial invariant over g2",
         is_invariant(g2, g_poly({2}, {2}), VariablePattern::automatic, threads).invariant);

    for (int id = 1; id <= 4; ++id)
        note("relation " + std::to_string(id), check_relation(id).holds);
    note("charpoly identity N=4", charpoly_pfaffian_identity(4).holds);

    // graph encodings reproduce the stated normalizations
    {
        InvariantGraph pf_graph;
        pf_graph.vertices.push_back(
            {InvariantGraph::Color::black, {{1, false}, {1, true}, {2, false}, {2, true}}});
        pf_graph.edges.push_back({0, 0});
        pf_graph.edges.push_back({0, 0});
        note("pfaffian graph normalization",
             compile_graph(pf_graph, 4).skew_substituted() ==
                 pf_full_poly(4).scaled(pf_graph_normalization(2)));
    }

    detail::Rng rng(seed);
    {
        Enveloping env(so4);
        bool agree = true;
        for (int t = 0; t < 10 && agree; ++t) {
            std::vector<LieVector> word;
            const int len = 1 + rng.below(4);
            for (int u = 0; u < len; ++u) word.push_back(detail::random_vector(rng, so4.dim()));
            agree = env.pbw_normalize(word) == env.brute_force_normalize(word);
        }
        note("pbw oracle agreement (so4)", agree);

        const LMatrix L4 = build_L(so4);
        bool equiv = true;
        for (int t = 0; t < 5 && equiv; ++t) {
            MPolynomial p = detail::random_poly(rng, 4, 2, 3);
            LieVector g = detail::random_vector(rng, so4.dim());
            equiv = env.equivariance_check(p, g, L4).holds;
        }
        note("equivariance (so4, random polynomials)", equiv);

        note("casimir so4 central", casimir(env, L4, threads).centrality.central);
        note("pfaffian so4 central",
             pfaffian_family(env, L4, 0, true, threads).centrality.central);
    }
    {
        Enveloping env(gl2);
        const LMatrix L2 = build_L(gl2);
        note("determinant gl2 central", det_family(env, L2, 2, threads).centrality.central);
    }
    {
        Enveloping env(g2);
        note("casimir g2 central", casimir(env, Lg2, threads).centrality.central);
    }
    return res;
}

} // namespace cea
