#pragma once

/**
 * @file eigensolve.hpp
 * @brief Numerical eigenvalue oracles: implicit-shift QL for real symmetric
 *        tridiagonal matrices and shifted inverse iteration for complex
 *        tridiagonal matrices.
 */

#include "gdo/operator_matrix.hpp"

#include <algorithm>
#include <limits>
#include <span>

namespace gdo {

struct EigenResult {
    Complex eigenvalue;
    ComplexVector eigenvector;
    /// ||M v - lambda v|| / max(1, max|M_ij|) for unit Euclidean v.
    Real residual_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

inline constexpr int kMaxQlSweeps = 50;

/// All eigenvalues of the symmetric tridiagonal matrix (diag, offdiag),
/// ascending. Implicit QL with Wilkinson-style shifts; no eigenvectors.
inline RealVector symtridiag_eigenvalues(std::span<const Real> diag, std::span<const Real> offdiag)
{
    const std::size_t n = diag.size();
    if (n == 0) return {};
    if (offdiag.size() + 1 != n) throw DimensionError("offdiag must have length diag.size() - 1");

    RealVector d(diag.begin(), diag.end());
    RealVector e(n, 0.0);
    std::copy(offdiag.begin(), offdiag.end(), e.begin()); // e[n-1] = 0

    for (std::size_t l = 0; l < n; ++l) {
        int sweeps = 0;
        for (;;) {
            std::size_t m = l;
            for (; m + 1 < n; ++m) {
                const Real dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<Real>::epsilon() * dd) break;
            }
            if (m == l) break;
            if (++sweeps > kMaxQlSweeps) {
                throw ConvergenceError("symmetric tridiagonal QL did not converge within 50 sweeps");
            }
            Real g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            Real r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            Real s = 1.0;
            Real c = 1.0;
            Real p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                Real f = s * e[i];
                const Real b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

/// Eigenvalues of -hbar^2 d^2/dx^2 + v (real v) on the grid, ascending.
inline RealVector schrodinger_eigenvalues(std::span<const Real> v, Real spacing, Real hbar = 1.0)
{
    const Real kinetic = hbar * hbar / (spacing * spacing);
    RealVector diag(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) diag[i] = 2.0 * kinetic + v[i];
    const RealVector off(v.size() - 1, -kinetic);
    return symtridiag_eigenvalues(diag, off);
}

/// (v* M v) / (v* v)
inline Complex rayleigh_quotient(const OperatorMatrix& matrix, std::span<const Complex> v)
{
    if (v.size() != matrix.dim()) throw DimensionError("rayleigh quotient dimension mismatch");
    const ComplexVector mv = matrix.apply(v);
    Complex num{};
    Real den = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        num += std::conj(v[i]) * mv[i];
        den += std::norm(v[i]);
    }
    if (!(den > 0.0)) throw DomainError("rayleigh quotient of a zero vector");
    return num / den;
}

namespace detail {

inline Real euclidean_norm(std::span<const Complex> v)
{
    Real s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

/// Unpivoted LU of a shifted tridiagonal matrix, (lower, pivots, upper).
struct TridiagonalLu {
    ComplexVector lower;
    ComplexVector pivot;
    ComplexVector upper;

    /// Returns false when a pivot is too small to divide by.
    bool factor(std::span<const Complex> sub, std::span<const Complex> diag, std::span<const Complex> sup,
                Complex shift, Real small)
    {
        const std::size_t n = diag.size();
        lower.assign(n, Complex{});
        pivot.assign(n, Complex{});
        upper.assign(sup.begin(), sup.end());
        pivot[0] = diag[0] - shift;
        for (std::size_t i = 1; i < n; ++i) {
            if (!(std::abs(pivot[i - 1]) > small)) return false;
            lower[i] = sub[i - 1] / pivot[i - 1];
            pivot[i] = diag[i] - shift - lower[i] * sup[i - 1];
        }
        // A tiny final pivot is what makes inverse iteration work; only an
        // exact zero is unusable.
        return std::abs(pivot[n - 1]) > 0.0 && std::isfinite(std::abs(pivot[n - 1]));
    }

    void solve(ComplexVector& x) const
    {
        const std::size_t n = pivot.size();
        for (std::size_t i = 1; i < n; ++i) x[i] -= lower[i] * x[i - 1];
        x[n - 1] /= pivot[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) x[i] = (x[i] - upper[i] * x[i + 1]) / pivot[i];
    }
};

} // namespace detail

inline constexpr int kMaxPivotRetries = 3;

/// Shifted inverse iteration on a tridiagonal matrix. Converges to the
/// eigenpair nearest `shift`; the eigenvalue is the Rayleigh quotient of the
/// final iterate. `tol` bounds the scaled residual (see EigenResult).
/// The returned eigenvector is normalized so that sum |v|^2 * spacing = 1.
inline EigenResult inverse_iteration(const OperatorMatrix& matrix, Complex shift, Real tol = 1e-10,
                                     int max_iter = 100, Real spacing = 1.0)
{
    if (!matrix.is_tridiagonal()) throw DimensionError("inverse iteration needs a tridiagonal matrix");
    const std::size_t n = matrix.dim();
    const ComplexVector diag(matrix.diagonal(0).begin(), matrix.diagonal(0).end());
    ComplexVector sub(n > 1 ? n - 1 : 0);
    ComplexVector sup(n > 1 ? n - 1 : 0);
    if (n > 1) {
        if (const auto s = matrix.diagonal(-1); !s.empty()) std::copy(s.begin(), s.end(), sub.begin());
        if (const auto s = matrix.diagonal(1); !s.empty()) std::copy(s.begin(), s.end(), sup.begin());
    }
    const ComplexVector full_diag = diag.empty() ? ComplexVector(n) : diag;
    const Real scale = std::max<Real>(1.0, matrix.max_abs());

    detail::TridiagonalLu lu;
    Complex used_shift = shift;
    int retries = 0;
    while (!lu.factor(sub, full_diag, sup, used_shift, scale * 1e-300)) {
        if (++retries > kMaxPivotRetries) throw SingularPivotError("inverse iteration: singular pivot after retries");
        used_shift += 1e-12 * scale * retries;
    }

    // Fixed start: all ones with a deterministic ripple so no eigenvector is missed by symmetry.
    ComplexVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.25 * std::sin(0.7 * static_cast<Real>(i) + 0.3);
    {
        const Real nv = detail::euclidean_norm(v);
        for (auto& z : v) z /= nv;
    }

    EigenResult result;
    for (int it = 1; it <= max_iter; ++it) {
        lu.solve(v);
        const Real nv = detail::euclidean_norm(v);
        if (!(nv > 0.0) || !std::isfinite(nv)) throw ConvergenceError("inverse iteration produced a non-finite iterate");
        for (auto& z : v) z /= nv;

        const ComplexVector mv = matrix.apply(v);
        Complex lambda{};
        for (std::size_t i = 0; i < n; ++i) lambda += std::conj(v[i]) * mv[i];
        Real res = 0.0;
        for (std::size_t i = 0; i < n; ++i) res += std::norm(mv[i] - lambda * v[i]);
        result.eigenvalue = lambda;
        result.residual_norm = std::sqrt(res) / scale;
        result.iterations = it;
        if (result.residual_norm <= tol) {
            result.converged = true;
            break;
        }
    }
    if (!result.converged) throw ConvergenceError("inverse iteration did not reach the residual tolerance");
    result.eigenvector = std::move(v);
    grid_normalize(result.eigenvector, spacing);
    return result;
}

} // namespace gdo
