#include <cmath>

#include "hooke/kernels.hpp"

namespace hooke::kernels::detail {

void boundary_residual_scan_scalar(const ResidualSeries& s, std::span<double> out) {
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double th = static_cast<double>(k) * s.step;
        out[k] = s.offset + s.c_cos * std::cos(th) + s.c_sin * std::sin(th);
    }
}

void state_invariants_scalar(const BilliardTable& table, const InvariantBatch& io) {
    const double a = table.a(), b = table.b(), sigma = table.sigma();
    const double ab_sigma = a * b * sigma;
    for (std::size_t k = 0; k < io.x.size(); ++k) {
        const double x = io.x[k], y = io.y[k];
        const double vx = io.vx[k], vy = io.vy[k];
        const double L = vy * x - vx * y;
        const double E = 0.5 * (vx * vx + vy * vy) + 0.5 * sigma * (x * x + y * y);
        const double p0 = L * L - (b * vx * vx + a * vy * vy)
                        - sigma * (b * x * x + a * y * y) + ab_sigma;
        const double c1 = 2.0 * E - sigma * (a + b);
        double lo, hi;
        solve_caustic_roots(sigma, c1, p0, lo, hi);
        io.energy[k] = E;
        io.p0[k] = p0;
        io.lambda1[k] = lo;
        io.lambda2[k] = hi;
    }
}

}  // namespace hooke::kernels::detail
