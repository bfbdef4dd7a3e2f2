#pragma once

/**
 * @file core.hpp
 * @brief Shared scalar types, physical constants, sampling grids and the
 *        exception hierarchy used across the gdo library.
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdo {

using Real = double;
using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<Real>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr Real kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation too close to a singularity of the interaction.
class PoleError : public Error { using Error::Error; };
/// Non-finite argument or value.
class DomainError : public Error { using Error::Error; };
class ParameterError : public Error { using Error::Error; };
class UnsupportedError : public Error { using Error::Error; };
class DimensionError : public Error { using Error::Error; };
class LevelOutOfRangeError : public Error { using Error::Error; };
/// Spinor coefficients requested off the positive-energy branch.
class BranchError : public Error { using Error::Error; };
class ConvergenceError : public Error { using Error::Error; };
/// A leading three-term recurrence coefficient vanished.
class DegenerateRecurrenceError : public Error { using Error::Error; };
class SingularPivotError : public Error { using Error::Error; };

// ---------------------------------------------------------------------------

/// Units for hbar, c and the rest mass. All strictly positive.
struct PhysicalConstants {
    Real hbar = 1.0;
    Real c = 1.0;
    Real mass = 1.0;

    void validate() const
    {
        if (!(hbar > 0.0) || !(c > 0.0) || !(mass > 0.0)) {
            throw ParameterError("physical constants hbar, c and mass must be strictly positive");
        }
    }

    Real rest_energy() const { return mass * c * c; }

    friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

/// Uniform 1-D sampling domain, endpoints included.
class Grid {
public:
    Grid(Real x_min, Real x_max, std::size_t n_points)
        : x_min_(x_min), x_max_(x_max), n_points_(n_points)
    {
        if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
            throw ParameterError("grid requires finite x_max > x_min");
        }
        if (n_points < 3) {
            throw ParameterError("grid requires at least 3 points");
        }
    }

    Real x_min() const { return x_min_; }
    Real x_max() const { return x_max_; }
    std::size_t size() const { return n_points_; }
    Real spacing() const { return (x_max_ - x_min_) / static_cast<Real>(n_points_ - 1); }

    Real operator[](std::size_t i) const
    {
        // Last point pinned to x_max so that the endpoints are reproduced exactly.
        if (i + 1 == n_points_) return x_max_;
        return x_min_ + static_cast<Real>(i) * spacing();
    }

    RealVector points() const
    {
        RealVector xs(n_points_);
        for (std::size_t i = 0; i < n_points_; ++i) xs[i] = (*this)[i];
        return xs;
    }

    /// Same interval with the spacing halved (2n-1 points, coarse nodes kept).
    Grid refined() const { return Grid(x_min_, x_max_, 2 * n_points_ - 1); }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    Real x_min_;
    Real x_max_;
    std::size_t n_points_;
};

/// Scales v in place so that sum |v_i|^2 * h == 1. Returns the scale applied.
inline Real grid_normalize(ComplexVector& v, Real h)
{
    Real sum = 0.0;
    for (const auto& z : v) sum += std::norm(z);
    const Real norm = std::sqrt(sum * h);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw DomainError("cannot normalize a zero or non-finite vector");
    }
    for (auto& z : v) z /= norm;
    return 1.0 / norm;
}

} // namespace gdo
