#pragma once

#include <cstddef>
#include <span>

#include "hooke/conics.hpp"

// Data-parallel inner loops, with a scalar reference implementation and an
// AVX2+FMA variant selected at runtime.  Everything here is plain arithmetic
// on arrays; all error handling lives in the callers.

namespace hooke::kernels {

enum class Isa { scalar, avx2 };

/// The instruction set the dispatched entry points actually use.  Honors the
/// HBILLIARD_KERNELS environment variable ("scalar" | "avx2" | "auto").
Isa active_isa();
const char* to_string(Isa isa);

/// Single-harmonic boundary residual along the Hooke flow:
///   f_k = offset + c_cos * cos(k * step) + c_sin * sin(k * step).
struct ResidualSeries {
    double offset;
    double c_cos;
    double c_sin;
    double step;  // radians per sample
};

/// Fills out[k] for k = 0 .. out.size()-1.  Dispatched.
void boundary_residual_scan(const ResidualSeries& s, std::span<double> out);

/// Batch billiard invariants for states given structure-of-arrays style.
/// For each k computes the total energy, the constant term p(0) of the
/// caustic polynomial, and the two caustic parameters (roots, clamped to a
/// double root when the discriminant is negligibly negative).
/// Preconditions are the caller's: no complex-caustic detection here.
struct InvariantBatch {
    std::span<const double> x, y, vx, vy;  // equal lengths
    std::span<double> energy, p0, lambda1, lambda2;
};
void state_invariants_batch(const BilliardTable& table, const InvariantBatch& io);

/// Shared root solve for sigma*l^2 + c1*l + c0 with the sign-matched quadratic
/// formula; both kernel variants and the scalar caustics() route through this.
inline void solve_caustic_roots(double sigma, double c1, double c0,
                                double& lo, double& hi) {
    double disc = c1 * c1 - 4.0 * sigma * c0;
    if (disc < 0.0) disc = 0.0;
    double sq = std::sqrt(disc);
    double q = -0.5 * (c1 + std::copysign(sq, c1));
    double r1, r2;
    if (q != 0.0) {
        r1 = q / sigma;
        r2 = c0 / q;
    } else {
        r1 = r2 = -c1 / (2.0 * sigma);
    }
    lo = std::min(r1, r2);
    hi = std::max(r1, r2);
}

namespace detail {
bool avx2_supported();
void boundary_residual_scan_scalar(const ResidualSeries& s, std::span<double> out);
void boundary_residual_scan_avx2(const ResidualSeries& s, std::span<double> out);
void state_invariants_scalar(const BilliardTable& table, const InvariantBatch& io);
void state_invariants_avx2(const BilliardTable& table, const InvariantBatch& io);
}  // namespace detail

}  // namespace hooke::kernels
