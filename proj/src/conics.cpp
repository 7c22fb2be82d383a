#include "hooke/conics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hooke {

BilliardTable::BilliardTable(double a, double b, double sigma)
    : a_(a), b_(b), sigma_(sigma), omega_(std::sqrt(sigma)) {
    if (!(a > b) || !(b > 0.0)) {
        throw std::invalid_argument("table requires a > b > 0");
    }
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("table requires sigma > 0");
    }
}

std::pair<Vec2, Vec2> BilliardTable::foci() const {
    double c = focal_half_distance();
    return {Vec2{c, 0.0}, Vec2{-c, 0.0}};
}

Vec2 BilliardTable::boundary_tangent(double s) const {
    Vec2 d{-std::sqrt(a_) * std::sin(s), std::sqrt(b_) * std::cos(s)};
    return d / norm(d);
}

const char* to_string(ConicClass c) {
    switch (c) {
        case ConicClass::OuterEllipse: return "OuterEllipse";
        case ConicClass::BoundaryEllipse: return "BoundaryEllipse";
        case ConicClass::InnerEllipse: return "InnerEllipse";
        case ConicClass::DegenerateFocal: return "DegenerateFocal";
        case ConicClass::Hyperbola: return "Hyperbola";
        case ConicClass::DegenerateMinorAxis: return "DegenerateMinorAxis";
    }
    return "?";
}

ConicClass classify_conic(const BilliardTable& table, double lambda, double tol) {
    if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
    if (lambda > table.a() + tol) throw std::domain_error("not a caustic parameter");

    // Snap to the nearest distinguished value within tol; ties resolve to the
    // smaller one, which is the nearest in either case.
    const double d0 = std::abs(lambda);
    const double db = std::abs(lambda - table.b());
    const double da = std::abs(lambda - table.a());
    const double dmin = std::min({d0, db, da});
    if (dmin <= tol) {
        if (dmin == d0) return ConicClass::BoundaryEllipse;
        if (dmin == db) return ConicClass::DegenerateFocal;
        return ConicClass::DegenerateMinorAxis;
    }
    if (lambda < 0.0) return ConicClass::OuterEllipse;
    if (lambda < table.b()) return ConicClass::InnerEllipse;
    return ConicClass::Hyperbola;
}

double conic_value(const BilliardTable& table, double lambda, Vec2 p) {
    const double da = table.a() - lambda;
    const double db = table.b() - lambda;
    if (da == 0.0 || db == 0.0) {
        throw std::domain_error("degenerate conic has no quadric form");
    }
    return p.x * p.x / da + p.y * p.y / db - 1.0;
}

FlowEllipse FlowEllipse::from_state(Vec2 xi, Vec2 v, double omega) {
    FlowEllipse fe;
    fe.g1 = xi;
    fe.g2 = v / omega;
    // (p x g2)^2 + (g1 x p)^2 = (g1 x g2)^2 for points p on the ellipse.
    fe.cxx = fe.g1.y * fe.g1.y + fe.g2.y * fe.g2.y;
    fe.cyy = fe.g1.x * fe.g1.x + fe.g2.x * fe.g2.x;
    fe.cxy = -(fe.g1.x * fe.g1.y + fe.g2.x * fe.g2.y);
    const double d = cross(fe.g1, fe.g2);
    fe.rhs = d * d;
    return fe;
}

double FlowEllipse::membership_residual(Vec2 p) const {
    const double lhs = cxx * p.x * p.x + 2.0 * cxy * p.x * p.y + cyy * p.y * p.y;
    const double scale = std::max({rhs, std::abs(cxx) * p.x * p.x,
                                   2.0 * std::abs(cxy * p.x * p.y),
                                   std::abs(cyy) * p.y * p.y, 1e-300});
    return std::abs(lhs - rhs) / scale;
}

namespace {

// Golden-section minimization of f over [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, int iters = 80) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return std::min(f1, f2);
}

template <typename F>
double sampled_min(F&& f, int n) {
    double best = f(0.0);
    int best_k = 0;
    const double step = 2.0 * M_PI / n;
    for (int k = 1; k < n; ++k) {
        double val = f(k * step);
        if (val < best) { best = val; best_k = k; }
    }
    return golden_min(f, (best_k - 1) * step, (best_k + 1) * step);
}

}  // namespace

double tangency_defect(const BilliardTable& table, double lambda, const FlowEllipse& fe) {
    constexpr int kSamples = 4096;
    const ConicClass cls = classify_conic(table, lambda);

    if (cls == ConicClass::DegenerateFocal) {
        auto [fp, fm] = table.foci();
        auto d = [&](double th) {
            Vec2 p = fe.point(th);
            return std::min(dist(p, fp), dist(p, fm));
        };
        return sampled_min(d, kSamples);
    }
    if (cls == ConicClass::DegenerateMinorAxis) {
        auto d = [&](double th) { return std::abs(fe.point(th).x); };
        return sampled_min(d, kSamples);
    }

    // Proper conic: one-signed values touching zero mean tangency; values of
    // both signs mean a transversal crossing, reported as the smaller
    // penetration depth so that it vanishes only in the tangent limit.
    double max_pos = 0.0, max_neg = 0.0, max_abs = 0.0;
    const double step = 2.0 * M_PI / kSamples;
    for (int k = 0; k < kSamples; ++k) {
        const double v = conic_value(table, lambda, fe.point(k * step));
        max_pos = std::max(max_pos, v);
        max_neg = std::max(max_neg, -v);
        max_abs = std::max(max_abs, std::abs(v));
    }
    const double crossing_eps = 1e-12 * std::max(1.0, max_abs);
    if (max_pos > crossing_eps && max_neg > crossing_eps) {
        return std::min(max_pos, max_neg);
    }
    auto absval = [&](double th) {
        return std::abs(conic_value(table, lambda, fe.point(th)));
    };
    return sampled_min(absval, kSamples);
}

}  // namespace hooke
