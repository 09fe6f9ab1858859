#pragma once

#include "cea/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace cea {

/// Dense exact-rational matrix; sizes here are tiny (at most 49 columns).
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static RatMatrix identity(int n)
    {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }
    static RatMatrix elementary(int n, int i, int j)
    {
        RatMatrix m(n, n);
        m.at(i, j) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational &at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Rational &at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool is_zero() const
    {
        for (const auto &v : data_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool is_skew() const
    {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != -at(j, i)) return false;
        return true;
    }

    RatMatrix transposed() const
    {
        RatMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RatMatrix operator+(const RatMatrix &o) const
    {
        check_same_shape(o);
        RatMatrix r(rows_, cols_);
        for (size_t t = 0; t < data_.size(); ++t) r.data_[t] = data_[t] + o.data_[t];
        return r;
    }
    RatMatrix operator-(const RatMatrix &o) const
    {
        check_same_shape(o);
        RatMatrix r(rows_, cols_);
        for (size_t t = 0; t < data_.size(); ++t) r.data_[t] = data_[t] - o.data_[t];
        return r;
    }
    RatMatrix operator*(const RatMatrix &o) const
    {
        if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
        RatMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += at(i, k) * o.at(k, j);
                }
            }
        return r;
    }
    RatMatrix scaled(const Rational &c) const
    {
        RatMatrix r(rows_, cols_);
        for (size_t t = 0; t < data_.size(); ++t) r.data_[t] = data_[t] * c;
        return r;
    }

    friend RatMatrix commutator(const RatMatrix &a, const RatMatrix &b) { return a * b - b * a; }

    friend bool operator==(const RatMatrix &a, const RatMatrix &b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    void check_same_shape(const RatMatrix &o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("RatMatrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rational> data_;
};

/// Solves "express a matrix in the span of fixed basis matrices" exactly.
/// The basis matrices are vectorized into columns and reduced once; each
/// solve is then a single elimination pass.
class MatrixSpanSolver {
  public:
    explicit MatrixSpanSolver(const std::vector<RatMatrix> &basis)
    {
        if (basis.empty()) throw std::invalid_argument("MatrixSpanSolver: empty basis");
        rows_ = basis[0].rows() * basis[0].cols();
        n_ = static_cast<int>(basis.size());
        a_.assign(rows_, std::vector<Rational>(n_));
        for (int c = 0; c < n_; ++c) {
            const RatMatrix &m = basis[c];
            if (m.rows() != basis[0].rows() || m.cols() != basis[0].cols())
                throw std::invalid_argument("MatrixSpanSolver: mixed shapes");
            int r = 0;
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) a_[r++][c] = m.at(i, j);
        }
        // Row-reduce [A | I] so solves can reuse the recorded row operations.
        ops_.assign(rows_, std::vector<Rational>(rows_));
        for (int r = 0; r < rows_; ++r) ops_[r][r] = Rational(1);
        int lead = 0;
        for (int col = 0; col < n_ && lead < rows_; ++col) {
            int piv = -1;
            for (int r = lead; r < rows_; ++r)
                if (!a_[r][col].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(a_[piv], a_[lead]);
            std::swap(ops_[piv], ops_[lead]);
            const Rational inv = Rational(1) / a_[lead][col];
            scale_row(lead, inv);
            for (int r = 0; r < rows_; ++r) {
                if (r == lead || a_[r][col].is_zero()) continue;
                add_row(r, lead, -a_[r][col]);
            }
            pivots_.emplace_back(lead, col);
            ++lead;
        }
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

    /// Exact coordinates of `m` over the basis, or nullopt when m is
    /// outside the span.
    std::optional<std::vector<Rational>> solve(const RatMatrix &m) const
    {
        std::vector<Rational> b(rows_);
        int r = 0;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) b[r++] = m.at(i, j);
        // Apply the recorded row operations to b.
        std::vector<Rational> rb(rows_);
        for (int i = 0; i < rows_; ++i) {
            Rational s;
            for (int j = 0; j < rows_; ++j)
                if (!ops_[i][j].is_zero() && !b[j].is_zero()) s += ops_[i][j] * b[j];
            rb[i] = std::move(s);
        }
        std::vector<Rational> x(n_);
        for (auto [prow, pcol] : pivots_) x[pcol] = rb[prow];
        // Residual must vanish on the non-pivot rows.
        for (int i = rank(); i < rows_; ++i)
            if (!rb[i].is_zero()) return std::nullopt;
        return x;
    }

  private:
    void scale_row(int r, const Rational &c)
    {
        for (auto &v : a_[r]) v *= c;
        for (auto &v : ops_[r]) v *= c;
    }
    void add_row(int dst, int src, const Rational &c)
    {
        for (int j = 0; j < n_; ++j)
            if (!a_[src][j].is_zero()) a_[dst][j] += c * a_[src][j];
        for (int j = 0; j < rows_; ++j)
            if (!ops_[src][j].is_zero()) ops_[dst][j] += c * ops_[src][j];
    }

    int rows_, n_;
    std::vector<std::vector<Rational>> a_;
    std::vector<std::vector<Rational>> ops_;
    std::vector<std::pair<int, int>> pivots_;
};

} // namespace cea
