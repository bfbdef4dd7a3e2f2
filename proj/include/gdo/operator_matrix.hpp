#pragma once

/**
 * @file operator_matrix.hpp
 * @brief Square complex matrix stored by diagonals.
 *
 * Every discretized operator in this library is a handful of diagonals:
 * tridiagonal Schrodinger and ladder operators, and 2N x 2N Dirac blocks
 * whose couplings sit on offsets 0, +-(N-1), +-N, +-(N+1). Storing each
 * nonzero diagonal as a vector keeps memory O(N) where a dense 2N x 2N
 * array would be O(N^2). to_dense() gives the dense view for small sizes.
 *
 * Element (i, j) lives on diagonal k = j - i at position min(i, j).
 */

#include "gdo/core.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>

namespace gdo {

class OperatorMatrix {
public:
    using Offset = std::ptrdiff_t;
    using Diagonals = std::map<Offset, ComplexVector>;

    explicit OperatorMatrix(std::size_t dim, std::string label = {}) : dim_(dim), label_(std::move(label))
    {
        if (dim == 0) throw DimensionError("operator matrix dimension must be >= 1");
    }

    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    /// Largest |offset| of a stored diagonal; 0 for a diagonal matrix.
    std::size_t bandwidth() const
    {
        std::size_t bw = 0;
        for (const auto& [k, d] : diagonals_) bw = std::max<std::size_t>(bw, static_cast<std::size_t>(std::abs(k)));
        return bw;
    }

    bool is_tridiagonal() const { return bandwidth() <= 1; }

    const Diagonals& diagonals() const { return diagonals_; }

    /// Diagonal k, or an empty span when it is not stored.
    std::span<const Complex> diagonal(Offset k) const
    {
        const auto it = diagonals_.find(k);
        if (it == diagonals_.end()) return {};
        return it->second;
    }

    /// Mutable diagonal k, created zero-filled on first access.
    ComplexVector& diagonal_mut(Offset k)
    {
        const std::size_t len = diagonal_length(k);
        auto [it, inserted] = diagonals_.try_emplace(k);
        if (inserted) it->second.assign(len, Complex{});
        return it->second;
    }

    Complex operator()(std::size_t i, std::size_t j) const
    {
        check_index(i, j);
        const Offset k = static_cast<Offset>(j) - static_cast<Offset>(i);
        const auto it = diagonals_.find(k);
        if (it == diagonals_.end()) return {};
        return it->second[std::min(i, j)];
    }

    void set(std::size_t i, std::size_t j, Complex value)
    {
        check_index(i, j);
        const Offset k = static_cast<Offset>(j) - static_cast<Offset>(i);
        diagonal_mut(k)[std::min(i, j)] = value;
    }

    void add(std::size_t i, std::size_t j, Complex value)
    {
        check_index(i, j);
        const Offset k = static_cast<Offset>(j) - static_cast<Offset>(i);
        diagonal_mut(k)[std::min(i, j)] += value;
    }

    static OperatorMatrix identity(std::size_t dim, Complex scale = 1.0)
    {
        OperatorMatrix m(dim, "identity");
        m.diagonal_mut(0).assign(dim, scale);
        return m;
    }

    static OperatorMatrix diagonal_matrix(std::span<const Complex> values, std::string label = "diag")
    {
        OperatorMatrix m(values.size(), std::move(label));
        m.diagonal_mut(0).assign(values.begin(), values.end());
        return m;
    }

    /// Row-major dense copy.
    std::vector<ComplexVector> to_dense() const
    {
        std::vector<ComplexVector> dense(dim_, ComplexVector(dim_));
        for (const auto& [k, d] : diagonals_) {
            for (std::size_t p = 0; p < d.size(); ++p) {
                const auto [i, j] = position(k, p);
                dense[i][j] = d[p];
            }
        }
        return dense;
    }

    static OperatorMatrix from_dense(const std::vector<ComplexVector>& dense, std::string label = {})
    {
        OperatorMatrix m(dense.size(), std::move(label));
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (dense[i].size() != dense.size()) throw DimensionError("dense input is not square");
            for (std::size_t j = 0; j < dense.size(); ++j) {
                if (dense[i][j] != Complex{}) m.set(i, j, dense[i][j]);
            }
        }
        return m;
    }

    ComplexVector apply(std::span<const Complex> v) const
    {
        if (v.size() != dim_) throw DimensionError("matrix-vector dimension mismatch");
        ComplexVector out(dim_);
        for (const auto& [k, d] : diagonals_) {
            for (std::size_t p = 0; p < d.size(); ++p) {
                const auto [i, j] = position(k, p);
                out[i] += d[p] * v[j];
            }
        }
        return out;
    }

    OperatorMatrix adjoint() const
    {
        OperatorMatrix out(dim_, label_.empty() ? std::string{} : label_ + "^dagger");
        for (const auto& [k, d] : diagonals_) {
            auto& target = out.diagonal_mut(-k);
            for (std::size_t p = 0; p < d.size(); ++p) target[p] = std::conj(d[p]);
        }
        return out;
    }

    OperatorMatrix& operator+=(const OperatorMatrix& rhs)
    {
        require_same_dim(rhs);
        for (const auto& [k, d] : rhs.diagonals_) {
            auto& target = diagonal_mut(k);
            for (std::size_t p = 0; p < d.size(); ++p) target[p] += d[p];
        }
        return *this;
    }

    OperatorMatrix& operator-=(const OperatorMatrix& rhs)
    {
        require_same_dim(rhs);
        for (const auto& [k, d] : rhs.diagonals_) {
            auto& target = diagonal_mut(k);
            for (std::size_t p = 0; p < d.size(); ++p) target[p] -= d[p];
        }
        return *this;
    }

    OperatorMatrix& operator*=(Complex s)
    {
        for (auto& [k, d] : diagonals_) {
            for (auto& z : d) z *= s;
        }
        return *this;
    }

    friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
    friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }
    friend OperatorMatrix operator*(Complex s, OperatorMatrix m) { return m *= s; }

    friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs)
    {
        lhs.require_same_dim(rhs);
        OperatorMatrix out(lhs.dim_);
        const auto n = static_cast<Offset>(lhs.dim_);
        for (const auto& [p, a] : lhs.diagonals_) {
            for (const auto& [q, b] : rhs.diagonals_) {
                const Offset k = p + q;
                if (k <= -n || k >= n) continue;
                // (AB)_{i, i+p+q} += A_{i, i+p} B_{i+p, i+p+q}
                const Offset i_lo = std::max<Offset>({0, -p, -k});
                const Offset i_hi = std::min<Offset>({n, n - p, n - k});
                if (i_lo >= i_hi) continue;
                auto& target = out.diagonal_mut(k);
                for (Offset i = i_lo; i < i_hi; ++i) {
                    const Complex av = a[static_cast<std::size_t>(std::min(i, i + p))];
                    const Complex bv = b[static_cast<std::size_t>(std::min(i + p, i + k))];
                    target[static_cast<std::size_t>(std::min(i, i + k))] += av * bv;
                }
            }
        }
        return out;
    }

    /// Entry-wise maximum modulus.
    Real max_abs() const
    {
        Real m = 0.0;
        for (const auto& [k, d] : diagonals_) {
            for (const auto& z : d) m = std::max(m, std::abs(z));
        }
        return m;
    }

    /// 2x2 block matrix [[tl, tr], [bl, br]] from four equally sized blocks.
    static OperatorMatrix block2x2(const OperatorMatrix& tl, const OperatorMatrix& tr,
                                   const OperatorMatrix& bl, const OperatorMatrix& br, std::string label = {})
    {
        const std::size_t n = tl.dim();
        if (tr.dim() != n || bl.dim() != n || br.dim() != n) throw DimensionError("block sizes differ");
        OperatorMatrix out(2 * n, std::move(label));
        auto place = [&](const OperatorMatrix& block, std::size_t row0, std::size_t col0) {
            for (const auto& [k, d] : block.diagonals_) {
                for (std::size_t p = 0; p < d.size(); ++p) {
                    const auto [i, j] = position(k, p);
                    out.add(row0 + i, col0 + j, d[p]);
                }
            }
        };
        place(tl, 0, 0);
        place(tr, 0, n);
        place(bl, n, 0);
        place(br, n, n);
        return out;
    }

private:
    std::size_t diagonal_length(Offset k) const
    {
        const auto n = static_cast<Offset>(dim_);
        if (k <= -n || k >= n) throw DimensionError("diagonal offset outside matrix");
        return static_cast<std::size_t>(n - std::abs(k));
    }

    static std::pair<std::size_t, std::size_t> position(Offset k, std::size_t p)
    {
        if (k >= 0) return {p, p + static_cast<std::size_t>(k)};
        return {p + static_cast<std::size_t>(-k), p};
    }

    void check_index(std::size_t i, std::size_t j) const
    {
        if (i >= dim_ || j >= dim_) throw DimensionError("matrix index out of range");
    }

    void require_same_dim(const OperatorMatrix& rhs) const
    {
        if (rhs.dim_ != dim_) throw DimensionError("matrix dimensions differ");
    }

    std::size_t dim_;
    std::string label_;
    Diagonals diagonals_;
};

/// max_{ij} |lhs_ij - rhs_ij|
inline Real max_abs_difference(const OperatorMatrix& lhs, const OperatorMatrix& rhs)
{
    return (lhs - rhs).max_abs();
}

/// max_{ij} |M_ij - conj(M_ji)|
inline Real hermiticity_defect(const OperatorMatrix& m)
{
    return max_abs_difference(m, m.adjoint());
}

} // namespace gdo
