#include "cea/lie_algebra.hpp"

#include <gtest/gtest.h>

using namespace cea;

namespace {

int gl_index(int N, int i, int j) { return (i - 1) * N + (j - 1); } // 1-based E_{ij}

LieVector gl_bracket_formula(const LieAlgebra &alg, int i, int j, int k, int l)
{
    // [E_ij, E_kl] = d_jk E_il - d_li E_kj
    const int N = alg.rep_dim();
    LieVector v(alg.dim());
    if (j == k) v.coeffs[gl_index(N, i, l)] += Rational(1);
    if (l == i) v.coeffs[gl_index(N, k, j)] -= Rational(1);
    return v;
}

} // namespace

TEST(GL, AbelianRankOne)
{
    auto gl1 = LieAlgebra::make_gl(1);
    EXPECT_EQ(gl1.dim(), 1);
    EXPECT_TRUE(gl1.bracket_basis(0, 0).empty());
    EXPECT_TRUE(gl1.structure_constants().is_zero());
}

TEST(GL, ElementaryMatrixBracket)
{
    auto gl2 = LieAlgebra::make_gl(2);
    // [E12, E21] = E11 - E22
    LieVector expected(4);
    expected.coeffs[gl_index(2, 1, 1)] = Rational(1);
    expected.coeffs[gl_index(2, 2, 2)] = Rational(-1);
    EXPECT_EQ(gl2.bracket(gl2.basis_vec(gl_index(2, 1, 2)), gl2.basis_vec(gl_index(2, 2, 1))),
              expected);
}

TEST(GL, StructureConstantsMatchTheFormula)
{
    auto gl3 = LieAlgebra::make_gl(3);
    EXPECT_EQ(gl3.dim(), 9);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l)
                    EXPECT_EQ(gl3.bracket(gl3.basis_vec(gl_index(3, i, j)),
                                          gl3.basis_vec(gl_index(3, k, l))),
                              gl_bracket_formula(gl3, i, j, k, l));
}

TEST(GL, JacobiAndRepresentation)
{
    for (int N = 1; N <= 3; ++N) {
        auto alg = LieAlgebra::make_gl(N);
        EXPECT_TRUE(alg.jacobi_holds()) << "gl" << N;
        EXPECT_TRUE(alg.representation_property_holds()) << "gl" << N;
    }
}

TEST(SO, PairBrackets)
{
    auto so3 = LieAlgebra::make_so(3);
    // order: F12=0, F13=1, F23=2
    LieVector f13(3);
    f13.coeffs[1] = Rational(1);
    EXPECT_EQ(so3.bracket(so3.basis_vec(0), so3.basis_vec(2)), f13); // [F12,F23] = F13

    auto so5 = LieAlgebra::make_so(5);
    EXPECT_EQ(so5.dim(), 10);
    // disjoint supports commute: [F12, F34] = 0
    const auto &labels = so5.basis_labels();
    int f12 = -1, f34 = -1;
    for (int a = 0; a < so5.dim(); ++a) {
        if (labels[a] == "F(1,2)") f12 = a;
        if (labels[a] == "F(3,4)") f34 = a;
    }
    ASSERT_GE(f12, 0);
    ASSERT_GE(f34, 0);
    EXPECT_TRUE(so5.bracket(so5.basis_vec(f12), so5.basis_vec(f34)).is_zero());
}

TEST(SO, JacobiAndRepresentationUpToSix)
{
    for (int N = 2; N <= 6; ++N) {
        auto alg = LieAlgebra::make_so(N);
        EXPECT_EQ(alg.dim(), N * (N - 1) / 2);
        EXPECT_TRUE(alg.jacobi_holds()) << "so" << N;
        EXPECT_TRUE(alg.representation_property_holds()) << "so" << N;
    }
}

TEST(Constructors, SizeGuards)
{
    EXPECT_THROW(LieAlgebra::make_so(1), std::invalid_argument);
    EXPECT_THROW(LieAlgebra::make_gl(0), std::invalid_argument);
}

TEST(DerivationMatrix, BasicProperties)
{
    EXPECT_TRUE(derivation_matrix(Octonion::unit(1), Octonion::unit(1)).is_zero());
    EXPECT_THROW(derivation_matrix(Octonion::one(), Octonion::unit(2)), std::invalid_argument);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            RatMatrix m = derivation_matrix(Octonion::unit(i), Octonion::unit(j));
            EXPECT_TRUE(m.is_skew()) << i << "," << j;
        }
}

TEST(DerivationMatrix, AnnihilatesTheThirdLinePoint)
{
    // G_{1,2}(e3): [[e1,e2],e3] = [2e3,e3] = 0 and the associator of a line
    // vanishes, so the column of e3 is exactly zero.
    RatMatrix g12 = derivation_matrix(Octonion::unit(1), Octonion::unit(2));
    for (int row = 0; row < 7; ++row) EXPECT_EQ(g12.at(row, 2), Rational(0));
    EXPECT_TRUE(oct_associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(3)).is_zero());
    EXPECT_FALSE(g12.is_zero());
}

TEST(DerivationMatrix, LeibnizRuleOnProducts)
{
    // G(ab) = G(a) b + a G(b); validates the -3 associator normalization.
    auto apply = [](const RatMatrix &m, const Octonion &z) {
        Octonion r;
        for (int col = 0; col < 7; ++col) {
            if (z.coords[col + 1].is_zero()) continue;
            for (int row = 0; row < 7; ++row)
                r.coords[row + 1] += m.at(row, col) * z.coords[col + 1];
        }
        return r;
    };
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            RatMatrix g = derivation_matrix(Octonion::unit(i), Octonion::unit(j));
            for (int a = 1; a <= 7; ++a)
                for (int b = 1; b <= 7; ++b) {
                    const Octonion ea = Octonion::unit(a), eb = Octonion::unit(b);
                    const Octonion prod = oct_mul(ea, eb);
                    Octonion imag_part = prod;
                    imag_part.coords[0] = Rational(0); // derivations kill the real part
                    EXPECT_EQ(apply(g, imag_part),
                              oct_mul(apply(g, ea), eb) + oct_mul(ea, apply(g, eb)));
                }
        }
}

TEST(G2, DimensionJacobiRepresentation)
{
    auto g2 = LieAlgebra::make_g2();
    EXPECT_EQ(g2.dim(), 14);
    EXPECT_EQ(g2.rep_dim(), 7);
    EXPECT_TRUE(g2.jacobi_holds());
    EXPECT_TRUE(g2.representation_property_holds());
}

TEST(G2, GeneratorExpansion)
{
    auto g2 = LieAlgebra::make_g2();
    for (int i = 1; i <= 7; ++i) {
        EXPECT_TRUE(g2_generator(g2, i, i).is_zero());
        for (int j = 1; j <= 7; ++j)
            EXPECT_EQ(g2_generator(g2, j, i), -g2_generator(g2, i, j));
    }
    // expansions reproduce the derivation matrices
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            if (i == j) continue;
            EXPECT_EQ(g2.rep_of(g2_generator(g2, i, j)),
                      derivation_matrix(Octonion::unit(i), Octonion::unit(j)));
        }
}

TEST(G2, OmegaContractionRelation)
{
    // sum_{ij} omega_{ijl} L_{ij} = 0, as matrices and as basis expansions
    auto g2 = LieAlgebra::make_g2();
    const OmegaTensor w = omega3();
    for (int l = 0; l < 7; ++l) {
        RatMatrix msum(7, 7);
        LieVector vsum(14);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                const Rational c = w.entries.at({i, j, l});
                if (c.is_zero()) continue;
                msum = msum + derivation_matrix(Octonion::unit(i + 1), Octonion::unit(j + 1))
                                  .scaled(c);
                vsum.add_scaled(g2_generator(g2, i + 1, j + 1), c);
            }
        EXPECT_TRUE(msum.is_zero()) << "l=" << l;
        EXPECT_TRUE(vsum.is_zero()) << "l=" << l;
    }
}

TEST(LMatrixTest, LayoutSO3)
{
    auto so3 = LieAlgebra::make_so(3);
    LMatrix L = build_L(so3);
    // [[0, F12, F13], [-F12, 0, F23], [-F13, -F23, 0]]
    EXPECT_TRUE(L.at(0, 0).is_zero());
    EXPECT_EQ(L.at(0, 1), so3.basis_vec(0));
    EXPECT_EQ(L.at(0, 2), so3.basis_vec(1));
    EXPECT_EQ(L.at(1, 2), so3.basis_vec(2));
    EXPECT_EQ(L.at(1, 0), -so3.basis_vec(0));
    EXPECT_TRUE(L.relations_hold());
}

TEST(LMatrixTest, LayoutGL2)
{
    auto gl2 = LieAlgebra::make_gl(2);
    LMatrix L = build_L(gl2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_EQ(L.at(i, j), gl2.basis_vec(gl_index(2, i + 1, j + 1)));
    EXPECT_TRUE(L.relations.empty());
}

TEST(LMatrixTest, G2RelationsHold)
{
    auto g2 = LieAlgebra::make_g2();
    LMatrix L = build_L(g2);
    EXPECT_TRUE(L.relations_hold());
    // 28 skew relations (upper triangle incl. diagonal) + 7 omega relations
    EXPECT_EQ(L.relations.size(), 35u);
}

TEST(Equivariance, CommutatorMatchesIndexAction)
{
    // [g, L_{ij}] computed through structure constants equals the transform
    // of the index pair through the representation.
    for (int N = 2; N <= 6; ++N) {
        auto alg = LieAlgebra::make_so(N);
        LMatrix L = build_L(alg);
        for (int g = 0; g < alg.dim(); ++g)
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    EXPECT_EQ(alg.bracket(alg.basis_vec(g), L.at(i, j)),
                              l_pair_action(alg, L, g, i, j))
                        << "so" << N;
    }
    auto g2 = LieAlgebra::make_g2();
    LMatrix L = build_L(g2);
    for (int g = 0; g < 14; ++g)
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                EXPECT_EQ(g2.bracket(g2.basis_vec(g), L.at(i, j)), l_pair_action(g2, L, g, i, j));
}

TEST(Equivariance, HoldsForGLToo)
{
    auto gl3 = LieAlgebra::make_gl(3);
    LMatrix L = build_L(gl3);
    for (int g = 0; g < gl3.dim(); ++g)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                EXPECT_EQ(gl3.bracket(gl3.basis_vec(g), L.at(i, j)),
                          l_pair_action(gl3, L, g, i, j));
}

TEST(G2, BasisSelectionOrderIsHarmless)
{
    auto lex = LieAlgebra::make_g2(G2BasisOrder::lex);
    auto rev = LieAlgebra::make_g2(G2BasisOrder::reverse_lex);
    EXPECT_EQ(rev.dim(), 14);
    EXPECT_TRUE(rev.jacobi_holds());
    EXPECT_NE(lex.basis_labels(), rev.basis_labels());
    // both realize the same matrix algebra
    MatrixSpanSolver lex_span(lex.rep_matrices());
    for (const auto &m : rev.rep_matrices()) EXPECT_TRUE(lex_span.solve(m).has_value());
}
