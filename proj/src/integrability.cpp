#include "hooke/integrability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hooke/kernels.hpp"

namespace hooke {

double confocal_form(const BilliardTable& table, double lambda, Vec2 u, Vec2 w) {
    const double pole_tol = 1e-12 * std::max(1.0, table.a());
    const double da = table.a() - lambda;
    const double db = table.b() - lambda;
    if (std::abs(da) <= pole_tol || std::abs(db) <= pole_tol) {
        throw std::domain_error("pole of q");
    }
    return u.x * w.x / da + u.y * w.y / db;
}

LaxEval lax_L(const BilliardTable& table, const PhasePoint& s, double lambda) {
    const double qxv = confocal_form(table, lambda, s.xi, s.v);
    const double qvv = confocal_form(table, lambda, s.v, s.v);
    const double qxx = confocal_form(table, lambda, s.xi, s.xi);
    return {{{qxv, qvv - table.sigma()}, {-qxx + 1.0, -qxv}}};
}

LaxEval lax_M(const BilliardTable& table, const PhasePoint& s, double lambda) {
    const double sigma = table.sigma();
    const double vAv = table.formA(s.v, s.v);
    const double xiAv = table.formA(s.xi, s.v);
    const double nu =
        std::sqrt(4.0 * sigma * xiAv * xiAv + (sigma - vAv) * (sigma - vAv));
    if (nu <= 1e-12 * (sigma + std::abs(vAv))) {
        throw std::domain_error("singular map point");
    }
    const Vec2 xt = (-1.0 / nu) * (sigma * s.xi - vAv * s.xi + 2.0 * xiAv * s.v);
    const Vec2 u = (-1.0 / nu) * (sigma * s.v - vAv * s.v - 2.0 * sigma * xiAv * s.xi);
    const Vec2 Axt = table.applyA(xt);
    const double mu = -2.0 * dot(u, Axt) / dot(Axt, Axt);

    LaxEval m;
    m.m[0][0] = sigma * lambda - vAv * lambda + 2.0 * xiAv * mu;
    m.m[0][1] = 2.0 * sigma * xiAv * lambda - sigma * mu + vAv * mu;
    m.m[1][0] = -2.0 * xiAv * lambda;
    m.m[1][1] = sigma * lambda - vAv * lambda;
    return m;
}

CharPoly char_poly(const BilliardTable& table, const PhasePoint& s) {
    const double a = table.a(), b = table.b(), sigma = table.sigma();
    const double L = cross(s.xi, s.v);
    const double E = energy(table, s);
    const double c0 = L * L - (b * s.v.x * s.v.x + a * s.v.y * s.v.y) -
                      sigma * (b * s.xi.x * s.xi.x + a * s.xi.y * s.xi.y) +
                      a * b * sigma;
    return {sigma, 2.0 * E - sigma * (a + b), c0};
}

std::array<double, 5> probe_lambdas(const BilliardTable& table) {
    const double a = table.a(), b = table.b();
    return {-1.0, b / 3.0, b / 2.0, 0.5 * (a + b), a + b};
}

double char_poly_residual(const BilliardTable& table, const PhasePoint& s) {
    const CharPoly p = char_poly(table, s);
    const auto probes = probe_lambdas(table);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double l = probes[i];
        const double via_lax =
            (l - table.a()) * (l - table.b()) * lax_L(table, s, l).det();
        const double direct = p.eval(l);
        worst = std::max(worst, std::abs(direct - via_lax) /
                                    std::max(1.0, std::abs(direct)));
    }
    return worst;
}

CausticPair caustics(const BilliardTable& table, const PhasePoint& s) {
    const CharPoly p = char_poly(table, s);
    if (p.discriminant() < -1e-12) {
        throw std::domain_error("complex caustics");
    }
    double lo, hi;
    kernels::solve_caustic_roots(p.c2, p.c1, p.c0, lo, hi);
    return {lo, hi, classify_conic(table, lo), classify_conic(table, hi)};
}

double default_domain_slack(const BilliardTable& table) {
    return 1e-12 * std::max(1.0, table.a() * table.b() * table.sigma());
}

bool in_billiard_domain(const BilliardTable& table, const PhasePoint& s,
                        double c0_slack) {
    return char_poly(table, s).c0 <= c0_slack && table.contains(s.xi);
}

InvariantData momentum_map(const BilliardTable& table, const PhasePoint& s) {
    if (!in_billiard_domain(table, s, default_domain_slack(table))) {
        throw std::domain_error("state not in billiard domain");
    }
    const double sigma = table.sigma();
    const CharPoly p = char_poly(table, s);
    // lambda2 = (sigma(a+b) - v^2 - sigma xi^2 + sqrt(... - 4 sigma p(0))) / (2 sigma)
    const double lin = -p.c1;
    const double disc = std::max(0.0, lin * lin - 4.0 * sigma * p.c0);
    return {energy(table, s), (lin + std::sqrt(disc)) / (2.0 * sigma)};
}

}  // namespace hooke
