#pragma once

/**
 * @file polynomials.hpp
 * @brief Associated Laguerre and Jacobi polynomials of complex argument
 *        and complex parameters via three-term recurrences.
 */

#include "gdo/core.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace gdo {

/// L_n^k(z).
template <typename T>
std::complex<T> laguerre(int n, std::complex<T> k, std::complex<T> z)
{
    if (n < 0) throw ParameterError("laguerre degree must be >= 0");
    std::complex<T> prev{1};
    if (n == 0) return prev;
    std::complex<T> cur = T(1) + k - z;
    for (int m = 1; m < n; ++m) {
        // (m+1) L_{m+1} = (2m+1+k-z) L_m - (m+k) L_{m-1}
        const std::complex<T> next = ((T(2 * m + 1) + k - z) * cur - (T(m) + k) * prev) / T(m + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace detail {

/// Generalized binomial C(top, m) for integer m >= 0.
template <typename T>
std::complex<T> binomial(std::complex<T> top, int m)
{
    std::complex<T> out{1};
    for (int i = 1; i <= m; ++i) out *= (top - T(m - i)) / T(i);
    return out;
}

} // namespace detail

/// Relative error budget of the Jacobi recurrence; beyond it the recurrence
/// is reported as degenerate.
inline constexpr double kRecurrenceErrorBudget = 1e-11;

/// P_n^(a,b)(y) by the standard recurrence
///   2m(m+a+b)(2m+a+b-2) P_m = (2m+a+b-1)[(2m+a+b)(2m+a+b-2) y + a^2 - b^2] P_{m-1}
///                             - 2(m+a-1)(m+b-1)(2m+a+b) P_{m-2}.
/// Throws DegenerateRecurrenceError when the leading coefficient vanishes for
/// some 2 <= m <= n, or when it is small enough that the running rounding
/// error bound exceeds kRecurrenceErrorBudget relative to the result.
template <typename T>
std::complex<T> jacobi(int n, std::complex<T> a, std::complex<T> b, std::complex<T> y)
{
    if (n < 0) throw ParameterError("jacobi degree must be >= 0");
    std::complex<T> prev{1};
    if (n == 0) return prev;
    constexpr T u = std::numeric_limits<T>::epsilon();
    const std::complex<T> ab = a + b;
    std::complex<T> cur = (a - b) / T(2) + (T(1) + ab / T(2)) * y;
    T err_prev = 0;
    T err_cur = T(4) * u * (std::abs(a - b) / T(2) + std::abs((T(1) + ab / T(2)) * y));
    for (int m = 2; m <= n; ++m) {
        const std::complex<T> s = T(2 * m) + ab;
        const std::complex<T> lead = T(2 * m) * (T(m) + ab) * (s - T(2));
        const std::complex<T> mid = (s - T(1)) * ((s * (s - T(2))) * y + a * a - b * b);
        const std::complex<T> tail = T(2) * (T(m - 1) + a) * (T(m - 1) + b) * s;
        if (std::abs(lead) == T(0)) {
            throw DegenerateRecurrenceError("jacobi recurrence degenerates at m = " + std::to_string(m));
        }
        const T lead_abs = std::abs(lead);
        const T mid_abs = std::abs(mid);
        const T tail_abs = std::abs(tail);
        const std::complex<T> next = (mid * cur - tail * prev) / lead;
        const T err_next =
            (mid_abs * err_cur + tail_abs * err_prev + T(8) * u * (mid_abs * std::abs(cur) + tail_abs * std::abs(prev))) /
            lead_abs;
        prev = cur;
        cur = next;
        err_prev = err_cur;
        err_cur = err_next;
    }
    if (!(err_cur <= T(kRecurrenceErrorBudget) * std::abs(cur))) {
        throw DegenerateRecurrenceError("jacobi recurrence is ill-conditioned for these parameters");
    }
    return cur;
}

/// P_n^(a,b)(y) from the finite sum
///   sum_j C(n+a, n-j) C(n+b, j) ((y-1)/2)^j ((y+1)/2)^(n-j),
/// defined for every parameter pair.
template <typename T>
std::complex<T> jacobi_sum(int n, std::complex<T> a, std::complex<T> b, std::complex<T> y)
{
    if (n < 0) throw ParameterError("jacobi degree must be >= 0");
    const std::complex<T> lo = (y - T(1)) / T(2);
    const std::complex<T> hi = (y + T(1)) / T(2);
    std::complex<T> total{};
    for (int j = 0; j <= n; ++j) {
        total += detail::binomial(T(n) + a, n - j) * detail::binomial(T(n) + b, j) * std::pow(lo, j) *
                 std::pow(hi, n - j);
    }
    return total;
}

/// Recurrence, falling back to the finite sum when the recurrence degenerates.
template <typename T>
std::complex<T> jacobi_robust(int n, std::complex<T> a, std::complex<T> b, std::complex<T> y)
{
    try {
        return jacobi(n, a, b, y);
    } catch (const DegenerateRecurrenceError&) {
        return jacobi_sum(n, a, b, y);
    }
}

/// d/dy P_n^(a,b)(y) = (n+a+b+1)/2 P_{n-1}^(a+1,b+1)(y)
template <typename T>
std::complex<T> jacobi_derivative(int n, std::complex<T> a, std::complex<T> b, std::complex<T> y)
{
    if (n == 0) return {};
    return (T(n + 1) + a + b) / T(2) * jacobi_robust(n - 1, a + T(1), b + T(1), y);
}

/// d/dz L_n^k(z) = -L_{n-1}^{k+1}(z)
template <typename T>
std::complex<T> laguerre_derivative(int n, std::complex<T> k, std::complex<T> z)
{
    if (n == 0) return {};
    return -laguerre(n - 1, k + T(1), z);
}

} // namespace gdo
