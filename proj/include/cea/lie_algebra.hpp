#pragma once

#include "cea/matrix.hpp"
#include "cea/octonion.hpp"
#include "cea/omega.hpp"
#include "cea/sparse_tensor.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cea {

/// Element of a Lie algebra expressed over its chosen basis.
struct LieVector {
    std::vector<Rational> coeffs;

    LieVector() = default;
    explicit LieVector(int dim) : coeffs(dim) {}

    static LieVector basis(int dim, int index)
    {
        LieVector v(dim);
        v.coeffs[index] = Rational(1);
        return v;
    }

    int dim() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const
    {
        for (const auto &c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    LieVector operator+(const LieVector &o) const
    {
        LieVector r(dim());
        for (int i = 0; i < dim(); ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
        return r;
    }
    LieVector operator-(const LieVector &o) const
    {
        LieVector r(dim());
        for (int i = 0; i < dim(); ++i) r.coeffs[i] = coeffs[i] - o.coeffs[i];
        return r;
    }
    LieVector operator-() const
    {
        LieVector r(dim());
        for (int i = 0; i < dim(); ++i) r.coeffs[i] = -coeffs[i];
        return r;
    }
    LieVector scaled(const Rational &c) const
    {
        LieVector r(dim());
        for (int i = 0; i < dim(); ++i) r.coeffs[i] = coeffs[i] * c;
        return r;
    }
    void add_scaled(const LieVector &o, const Rational &c)
    {
        for (int i = 0; i < dim(); ++i) coeffs[i] += o.coeffs[i] * c;
    }

    friend bool operator==(const LieVector &a, const LieVector &b) { return a.coeffs == b.coeffs; }
};

/// Derivation of the octonions attached to two imaginary octonions:
/// z -> [[x,y],z] - 3[x,y,z], restricted to the imaginary part. Columns are
/// the images of e1..e7.
inline RatMatrix derivation_matrix(const Octonion &x, const Octonion &y)
{
    if (!x.is_imaginary() || !y.is_imaginary())
        throw std::invalid_argument("derivation_matrix: arguments must be imaginary octonions");
    RatMatrix m(7, 7);
    const Octonion bracket_xy = oct_commutator(x, y);
    for (int j = 0; j < 7; ++j) {
        const Octonion ej = Octonion::unit(j + 1);
        Octonion img = oct_commutator(bracket_xy, ej) - oct_associator(x, y, ej).scaled(Rational(3));
        if (!img.real().is_zero())
            throw std::logic_error("derivation_matrix: image has a real component");
        for (int i = 0; i < 7; ++i) m.at(i, j) = img.coords[i + 1];
    }
    return m;
}

enum class G2BasisOrder { lex, reverse_lex };

/// A Lie algebra given by a basis, exact structure constants and the
/// matrices of the standard representation.
class LieAlgebra {
  public:
    using SparseVec = std::vector<std::pair<uint16_t, Rational>>;

    const std::string &name() const { return name_; }
    int dim() const { return dim_; }
    int rep_dim() const { return rep_dim_; }
    const std::vector<std::string> &basis_labels() const { return basis_labels_; }
    const std::vector<RatMatrix> &rep_matrices() const { return rep_matrices_; }

    /// [v_a, v_b] for basis indices, as a sparse coefficient list.
    const SparseVec &bracket_basis(int a, int b) const { return bracket_[a][b]; }

    LieVector bracket(const LieVector &x, const LieVector &y) const
    {
        LieVector r(dim_);
        for (int a = 0; a < dim_; ++a) {
            if (x.coeffs[a].is_zero()) continue;
            for (int b = 0; b < dim_; ++b) {
                if (y.coeffs[b].is_zero()) continue;
                const Rational c = x.coeffs[a] * y.coeffs[b];
                for (const auto &[g, v] : bracket_[a][b]) r.coeffs[g] += c * v;
            }
        }
        return r;
    }

    /// Structure constants as the order-3 tensor c[a][b][g].
    SparseTensor structure_constants() const
    {
        SparseTensor t(std::vector<int>{dim_, dim_, dim_});
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b)
                for (const auto &[g, v] : bracket_[a][b]) t.set({a, b, int(g)}, v);
        return t;
    }

    /// Representation matrix of an arbitrary element.
    RatMatrix rep_of(const LieVector &x) const
    {
        RatMatrix m(rep_dim_, rep_dim_);
        for (int a = 0; a < dim_; ++a)
            if (!x.coeffs[a].is_zero()) m = m + rep_matrices_[a].scaled(x.coeffs[a]);
        return m;
    }

    bool jacobi_holds() const
    {
        for (int a = 0; a < dim_; ++a)
            for (int b = a + 1; b < dim_; ++b)
                for (int c = b + 1; c < dim_; ++c) {
                    LieVector s = bracket(bracket(basis_vec(a), basis_vec(b)), basis_vec(c));
                    s = s + bracket(bracket(basis_vec(b), basis_vec(c)), basis_vec(a));
                    s = s + bracket(bracket(basis_vec(c), basis_vec(a)), basis_vec(b));
                    if (!s.is_zero()) return false;
                }
        return true;
    }

    bool representation_property_holds() const
    {
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b) {
                RatMatrix lhs = commutator(rep_matrices_[a], rep_matrices_[b]);
                RatMatrix rhs(rep_dim_, rep_dim_);
                for (const auto &[g, v] : bracket_[a][b]) rhs = rhs + rep_matrices_[g].scaled(v);
                if (!(lhs == rhs)) return false;
            }
        return true;
    }

    LieVector basis_vec(int index) const { return LieVector::basis(dim_, index); }

    /// Generator matrix entry L_{ij} (0-based i,j) expanded over the basis:
    /// E_{ij} for gl, F_{ij} for so, G_{ij} for g2.
    LieVector generator_vector(int i, int j) const
    {
        if (i < 0 || i >= rep_dim_ || j < 0 || j >= rep_dim_)
            throw std::invalid_argument("generator_vector: index out of range");
        switch (family_) {
        case Family::gl:
            return basis_vec(i * rep_dim_ + j);
        case Family::so: {
            if (i == j) return LieVector(dim_);
            if (i < j) return basis_vec(so_pair_index(i, j));
            return -basis_vec(so_pair_index(j, i));
        }
        case Family::g2:
            return g2_pair_expansion_[i][j];
        }
        throw std::logic_error("generator_vector: unknown family");
    }

    bool is_gl() const { return family_ == Family::gl; }
    bool is_so() const { return family_ == Family::so; }
    bool is_g2() const { return family_ == Family::g2; }

    /// gl_N: basis E_{ij} in row-major order, elementary rep matrices.
    static LieAlgebra make_gl(int N)
    {
        if (N < 1) throw std::invalid_argument("make_gl: N must be >= 1");
        LieAlgebra alg;
        alg.family_ = Family::gl;
        alg.name_ = "gl" + std::to_string(N);
        alg.rep_dim_ = N;
        alg.dim_ = N * N;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                alg.basis_labels_.push_back("E(" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
                alg.rep_matrices_.push_back(RatMatrix::elementary(N, i, j));
            }
        alg.compute_brackets();
        return alg;
    }

    /// so_N: basis F_{ij} = E_{ij} - E_{ji} for i<j, lexicographic.
    static LieAlgebra make_so(int N)
    {
        if (N < 2) throw std::invalid_argument("make_so: N must be >= 2");
        LieAlgebra alg;
        alg.family_ = Family::so;
        alg.name_ = "so" + std::to_string(N);
        alg.rep_dim_ = N;
        alg.dim_ = N * (N - 1) / 2;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                alg.basis_labels_.push_back("F(" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
                alg.rep_matrices_.push_back(RatMatrix::elementary(N, i, j) -
                                            RatMatrix::elementary(N, j, i));
            }
        alg.compute_brackets();
        return alg;
    }

    /// g2 as the derivations of the octonions acting on the 7 imaginary
    /// units. The 21 matrices G_{ij} = derivation_matrix(e_i, e_j), i<j, are
    /// scanned greedily in the given order and the 14 rank-increasing ones
    /// become the basis.
    static LieAlgebra make_g2(G2BasisOrder order = G2BasisOrder::lex)
    {
        LieAlgebra alg;
        alg.family_ = Family::g2;
        alg.name_ = "g2";
        alg.rep_dim_ = 7;

        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) pairs.emplace_back(i, j);
        if (order == G2BasisOrder::reverse_lex) std::reverse(pairs.begin(), pairs.end());

        std::vector<RatMatrix> all(7 * 7);
        auto mat_of = [&](int i, int j) -> RatMatrix & { return all[i * 7 + j]; };
        for (auto [i, j] : pairs) {
            mat_of(i, j) =
                derivation_matrix(Octonion::unit(i + 1), Octonion::unit(j + 1));
            mat_of(j, i) = mat_of(i, j).scaled(Rational(-1));
        }

        std::vector<RatMatrix> chosen;
        std::vector<std::pair<int, int>> chosen_pairs;
        std::unique_ptr<MatrixSpanSolver> solver;
        for (auto [i, j] : pairs) {
            const RatMatrix &cand = mat_of(i, j);
            if (cand.is_zero()) continue;
            if (solver && solver->solve(cand).has_value()) continue;
            chosen.push_back(cand);
            chosen_pairs.emplace_back(i, j);
            solver = std::make_unique<MatrixSpanSolver>(chosen);
        }
        if (chosen.size() != 14)
            throw std::logic_error("make_g2: derivation span has rank " +
                                   std::to_string(chosen.size()) + ", expected 14");

        alg.dim_ = 14;
        alg.rep_matrices_ = chosen;
        for (auto [i, j] : chosen_pairs)
            alg.basis_labels_.push_back("G(" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ")");
        alg.compute_brackets_with_solver(*solver);

        alg.g2_pair_expansion_.assign(7, std::vector<LieVector>(7, LieVector(14)));
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                if (i == j) continue;
                auto coeffs = solver->solve(mat_of(i, j));
                if (!coeffs)
                    throw std::logic_error("make_g2: G matrix outside the selected span");
                alg.g2_pair_expansion_[i][j].coeffs = std::move(*coeffs);
            }
        return alg;
    }

  private:
    enum class Family { gl, so, g2 };

    int so_pair_index(int i, int j) const
    {
        // Position of (i,j), i<j, in lexicographic pair order.
        return i * rep_dim_ - i * (i + 1) / 2 + (j - i - 1);
    }

    void compute_brackets()
    {
        MatrixSpanSolver solver(rep_matrices_);
        if (solver.rank() != dim_)
            throw std::logic_error("LieAlgebra: representation matrices are dependent");
        compute_brackets_with_solver(solver);
    }

    void compute_brackets_with_solver(const MatrixSpanSolver &solver)
    {
        bracket_.assign(dim_, std::vector<SparseVec>(dim_));
        for (int a = 0; a < dim_; ++a)
            for (int b = a + 1; b < dim_; ++b) {
                RatMatrix c = commutator(rep_matrices_[a], rep_matrices_[b]);
                auto coeffs = solver.solve(c);
                if (!coeffs) throw std::logic_error("LieAlgebra: bracket escapes the span");
                for (int g = 0; g < dim_; ++g) {
                    if ((*coeffs)[g].is_zero()) continue;
                    bracket_[a][b].emplace_back(uint16_t(g), (*coeffs)[g]);
                    bracket_[b][a].emplace_back(uint16_t(g), -(*coeffs)[g]);
                }
            }
    }

    Family family_ = Family::gl;
    std::string name_;
    int dim_ = 0;
    int rep_dim_ = 0;
    std::vector<std::string> basis_labels_;
    std::vector<RatMatrix> rep_matrices_;
    std::vector<std::vector<SparseVec>> bracket_;
    std::vector<std::vector<LieVector>> g2_pair_expansion_;
};

/// g2 generator G_{ij} (1-based octonion indices) expanded over the chosen
/// 14-element basis. G_{ii} = 0 and G_{ji} = -G_{ij}.
inline LieVector g2_generator(const LieAlgebra &alg, int i, int j)
{
    if (!alg.is_g2()) throw std::invalid_argument("g2_generator: algebra is not g2");
    if (i < 1 || i > 7 || j < 1 || j > 7)
        throw std::invalid_argument("g2_generator: indices must be in 1..7");
    return alg.generator_vector(i - 1, j - 1);
}

/// One linear identity sum c * L_{ij} = 0 satisfied by the entries of L.
struct LMatrixRelation {
    std::string label;
    std::vector<std::tuple<int, int, Rational>> terms; // (i, j, coefficient), 0-based
};

/// The N x N matrix whose entries are the generators of the algebra,
/// together with the linear relations those entries satisfy.
struct LMatrix {
    const LieAlgebra *algebra;
    std::vector<std::vector<LieVector>> entries;
    std::vector<LMatrixRelation> relations;

    int n() const { return static_cast<int>(entries.size()); }
    const LieVector &at(int i, int j) const { return entries[i][j]; }

    bool relations_hold() const
    {
        for (const auto &rel : relations) {
            LieVector s(algebra->dim());
            for (const auto &[i, j, c] : rel.terms) s.add_scaled(entries[i][j], c);
            if (!s.is_zero()) return false;
        }
        return true;
    }
};

inline LMatrix build_L(const LieAlgebra &alg)
{
    LMatrix L;
    L.algebra = &alg;
    const int N = alg.rep_dim();
    L.entries.assign(N, std::vector<LieVector>(N, LieVector(alg.dim())));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) L.entries[i][j] = alg.generator_vector(i, j);

    if (alg.is_so() || alg.is_g2()) {
        for (int i = 0; i < N; ++i)
            for (int j = i; j < N; ++j) {
                LMatrixRelation rel;
                rel.label = "skew(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                rel.terms = {{i, j, Rational(1)}, {j, i, Rational(1)}};
                L.relations.push_back(std::move(rel));
            }
    }
    if (alg.is_g2()) {
        const OmegaTensor w3 = omega3();
        for (int l = 0; l < 7; ++l) {
            LMatrixRelation rel;
            rel.label = "omega-contraction(l=" + std::to_string(l + 1) + ")";
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) {
                    Rational c = w3.entries.at({i, j, l});
                    if (!c.is_zero()) rel.terms.emplace_back(i, j, c);
                }
            L.relations.push_back(std::move(rel));
        }
    }
    return L;
}

/// The transform of the index pair of L_{ij} under a basis element g: the
/// matrix form of g acting on e_i ^ e_j through the standard representation.
/// Equals [g, L_{ij}] entrywise (verified in the test suite).
inline LieVector l_pair_action(const LieAlgebra &alg, const LMatrix &L, int g, int i, int j)
{
    const RatMatrix &V = alg.rep_matrices()[g];
    LieVector r(alg.dim());
    // (V^t L - L V^t)_{ij}
    for (int p = 0; p < alg.rep_dim(); ++p) {
        if (!V.at(p, i).is_zero()) r.add_scaled(L.at(p, j), V.at(p, i));
        if (!V.at(j, p).is_zero()) r.add_scaled(L.at(i, p), -V.at(j, p));
    }
    return r;
}

} // namespace cea
