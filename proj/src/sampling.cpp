#include "hooke/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace hooke {

BilliardTable random_table(Rng& rng) {
    const double a = rng.uniform(0.8, 5.0);
    const double b = a * rng.uniform(0.15, 0.85);
    const double sigma = rng.uniform(0.3, 3.0);
    return {a, b, sigma};
}

PhasePoint random_domain_state(const BilliardTable& table, Rng& rng,
                               double p0_margin) {
    const double rx = std::sqrt(table.a());
    const double ry = std::sqrt(table.b());
    // Speeds up to ~3x the boundary-limit speed keep energies desk-scale.
    const double vmax = 3.0 * std::sqrt(table.sigma() * (table.a() + table.b()));
    for (int tries = 0; tries < 100000; ++tries) {
        const Vec2 xi{rng.uniform(-rx, rx), rng.uniform(-ry, ry)};
        if (table.boundary_form(xi) > 0.0) continue;
        const Vec2 v{rng.uniform(-vmax, vmax), rng.uniform(-vmax, vmax)};
        if (norm2(v) > vmax * vmax) continue;
        const PhasePoint s{xi, v};
        if (char_poly(table, s).c0 <= -p0_margin) return s;
    }
    throw std::runtime_error("rejection sampling failed to hit the domain");
}

PhasePoint random_boundary_state(const BilliardTable& table, Rng& rng,
                                 double p0_margin) {
    const double vmax = 3.0 * std::sqrt(table.sigma() * (table.a() + table.b()));
    for (int tries = 0; tries < 100000; ++tries) {
        const Vec2 xi = table.boundary_point(rng.uniform(0.0, 2.0 * M_PI));
        Vec2 v{rng.uniform(-vmax, vmax), rng.uniform(-vmax, vmax)};
        if (norm2(v) > vmax * vmax) continue;
        // Fold onto the outgoing (inward-moving) representative.
        const Vec2 n = table.applyA(xi);
        const double vn = dot(v, n);
        if (vn > 0.0) v = v - (2.0 * vn / dot(n, n)) * n;
        const PhasePoint s{xi, v};
        if (char_poly(table, s).c0 <= -p0_margin) return s;
    }
    throw std::runtime_error("rejection sampling failed to hit the domain");
}

std::vector<PhasePoint> corner_probe_states(const BilliardTable& table, double delta) {
    const double a = table.a(), b = table.b(), sigma = table.sigma();
    std::vector<PhasePoint> out;

    // (sigma b/2, a): minor-axis orbit barely above the ground energy.
    {
        const double E = 0.5 * sigma * b * (1.0 + delta);
        const double w = std::sqrt(2.0 * E);
        out.push_back({{0.0, 0.0}, {0.0, w}});
    }
    // (sigma a/2, b): major-axis orbit at the saddle energy.
    {
        const double E = 0.5 * sigma * a * (1.0 + delta);
        const double w = std::sqrt(2.0 * E);
        out.push_back({{0.0, 0.0}, {w, 0.0}});
    }
    // (sigma (a+b)/2, 0): tangential boundary state at the limit energy.
    {
        const double E = 0.5 * sigma * (a + b) * (1.0 + delta);
        const double s = 0.25 * M_PI;
        const Vec2 xi = table.boundary_point(s);
        const double w = std::sqrt(std::max(0.0, 2.0 * E - sigma * norm2(xi)));
        out.push_back({xi, w * table.boundary_tangent(s)});
    }
    return out;
}

}  // namespace hooke
