#include "hooke/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hooke {

const char* to_string(FomenkoAtom a) {
    switch (a) {
        case FomenkoAtom::A: return "A";
        case FomenkoAtom::B: return "B";
        case FomenkoAtom::T: return "T";
        case FomenkoAtom::Eight: return "8";
    }
    return "?";
}

const char* to_string(EnergyBand b) {
    switch (b) {
        case EnergyBand::Ground: return "E = sigma b / 2";
        case EnergyBand::LowBand: return "sigma b / 2 < E < sigma a / 2";
        case EnergyBand::EightLevel: return "E = sigma a / 2";
        case EnergyBand::MiddleBand: return "sigma a / 2 < E < sigma (a + b) / 2";
        case EnergyBand::HighBand: return "E >= sigma (a + b) / 2";
    }
    return "?";
}

const char* to_string(StabilityClass s) {
    return s == StabilityClass::Stable ? "Stable" : "Unstable";
}

EnergyBand energy_band(const BilliardTable& table, double E, double tol) {
    const double s = table.sigma();
    const double e1 = 0.5 * s * table.b();
    const double e2 = 0.5 * s * table.a();
    const double e3 = 0.5 * s * (table.a() + table.b());
    if (E < e1 - tol) throw std::domain_error("empty isoenergy manifold");
    if (std::abs(E - e1) <= tol) return EnergyBand::Ground;
    if (std::abs(E - e2) <= tol) return EnergyBand::EightLevel;
    if (std::abs(E - e3) <= tol) return EnergyBand::HighBand;
    if (E < e2) return EnergyBand::LowBand;
    if (E < e3) return EnergyBand::MiddleBand;
    return EnergyBand::HighBand;
}

std::array<HalfLine, 3> bifurcation_set(const BilliardTable& table) {
    const double s = table.sigma();
    return {{{table.a(), 0.5 * s * table.b()},
             {table.b(), 0.5 * s * table.a()},
             {0.0, 0.5 * s * (table.a() + table.b())}}};
}

bool on_bifurcation_set(const BilliardTable& table, double E, double lambda2,
                        double tol) {
    for (const HalfLine& h : bifurcation_set(table)) {
        if (std::abs(lambda2 - h.lambda2) <= tol && E >= h.e_min - tol) return true;
    }
    return false;
}

bool in_momentum_image(const BilliardTable& table, double E, double lambda2,
                       double tol) {
    const double a = table.a(), b = table.b(), s = table.sigma();
    return lambda2 >= -tol && lambda2 <= a + tol &&
           lambda2 + 2.0 * E / s >= a + b - tol;
}

LevelClass classify_level(const BilliardTable& table, double E, double lambda2,
                          double tol) {
    if (!in_momentum_image(table, E, lambda2, tol)) {
        throw std::domain_error("empty level");
    }
    const double a = table.a(), b = table.b(), s = table.sigma();

    if (std::abs(lambda2 - a) <= tol) return {FomenkoAtom::A, 1};
    if (std::abs(lambda2) <= tol) return {FomenkoAtom::A, 2};
    if (std::abs(lambda2 - b) <= tol) {
        if (std::abs(E - 0.5 * s * a) <= tol) return {FomenkoAtom::Eight, 1};
        return {FomenkoAtom::B, 1};
    }
    const double lambda1 = a + b - 2.0 * E / s - lambda2;
    if (std::abs(lambda1) <= tol) {
        return {FomenkoAtom::T, lambda2 > b ? 1 : 2};
    }
    return {std::nullopt, lambda2 > b ? 1 : 2};
}

FomenkoGraph fomenko_graph(const BilliardTable& table, double E, double tol) {
    const double a = table.a(), b = table.b(), s = table.sigma();
    FomenkoGraph g;
    g.band = energy_band(table, E, tol);  // throws below the ground level
    g.energy = E;

    // Edges are stored from the lambda2 = b side outward, matching the arrow
    // orientation printed for the top band.
    switch (g.band) {
        case EnergyBand::Ground:
            g.vertices = {{FomenkoAtom::A, a, "A"}};
            break;
        case EnergyBand::LowBand: {
            const double l2 = a + b - 2.0 * E / s;
            g.vertices = {{FomenkoAtom::A, a, "A"}, {FomenkoAtom::T, l2, "T"}};
            g.edges = {{1, 0, {}, {}}};
            break;
        }
        case EnergyBand::EightLevel:
            g.vertices = {{FomenkoAtom::A, a, "A"}, {FomenkoAtom::Eight, b, "8"}};
            g.edges = {{1, 0, {}, {}}};
            break;
        case EnergyBand::MiddleBand: {
            const double l2 = a + b - 2.0 * E / s;
            g.vertices = {{FomenkoAtom::A, a, "A"},
                          {FomenkoAtom::B, b, "B"},
                          {FomenkoAtom::T, l2, "T"},
                          {FomenkoAtom::T, l2, "T"}};
            g.edges = {{1, 0, {}, {}}, {1, 2, {}, {}}, {1, 3, {}, {}}};
            break;
        }
        case EnergyBand::HighBand:
            g.vertices = {{FomenkoAtom::A, a, "A"},
                          {FomenkoAtom::B, b, "B"},
                          {FomenkoAtom::A, 0.0, "A+"},
                          {FomenkoAtom::A, 0.0, "A-"}};
            g.edges = {{1, 0, 0.0, 1}, {1, 2, 0.0, 1}, {1, 3, 0.0, 1}};
            g.families = {{{1}, -1}};
            break;
    }
    return g;
}

std::vector<PhasePoint> boundary_level_states(const BilliardTable& table,
                                              double E, double lambda2, double s) {
    const double a = table.a(), b = table.b(), sigma = table.sigma();
    const Vec2 xi = table.boundary_point(s);
    const double w2 = 2.0 * E - sigma * norm2(xi);
    if (w2 < -1e-12 * std::max(1.0, 2.0 * E)) return {};
    const double w = std::sqrt(std::max(0.0, w2));

    const double lambda1 = a + b - 2.0 * E / sigma - lambda2;
    std::vector<PhasePoint> out;

    const double snap = tol::lambda_snap;
    if (std::abs(lambda1) <= snap || std::abs(lambda2) <= snap) {
        // Grazing level: the only boundary states are tangential contacts.
        if (std::abs(lambda2 - std::max(0.0, a + b - 2.0 * E / sigma)) >
            1e-6 * std::max(1.0, a)) {
            return {};
        }
        const Vec2 t = table.boundary_tangent(s);
        out.push_back({xi, w * t});
        if (w > 0.0) out.push_back({xi, -w * t});
        return out;
    }

    // Solve p(0)(psi) = sigma l1 l2 for the velocity direction at fixed speed:
    // with v = w (cos psi, sin psi) the constant term is a single harmonic in
    // 2 psi.
    const double rhs = sigma * lambda1 * lambda2;
    const double A0 = 0.5 * w2 * (norm2(xi) - (a + b)) -
                      sigma * (b * xi.x * xi.x + a * xi.y * xi.y) + a * b * sigma;
    const double A1 = 0.5 * w2 * (xi.y * xi.y - xi.x * xi.x + a - b);
    const double A2 = -w2 * xi.x * xi.y;
    const double R = std::hypot(A1, A2);
    if (R <= 0.0) return {};
    double c = (rhs - A0) / R;
    if (std::abs(c) > 1.0 + 1e-10) return {};
    c = std::clamp(c, -1.0, 1.0);

    const double beta = std::acos(c);
    const double phi = std::atan2(A2, A1);
    const double scale = std::max({1.0, std::abs(A0), R, std::abs(rhs)});
    const Vec2 n = table.applyA(xi);

    for (double two_psi : {phi + beta, phi - beta}) {
        for (int half : {0, 1}) {
            const double psi = 0.5 * two_psi + half * M_PI;
            const PhasePoint st{xi, {w * std::cos(psi), w * std::sin(psi)}};
            const double c0 = char_poly(table, st).c0;
            if (std::abs(c0 - rhs) > 1e-8 * scale) continue;
            if (dot(st.v, n) > 1e-9 * std::max(1e-300, w * norm(n))) continue;
            bool dup = false;
            for (const PhasePoint& prev : out) {
                if (dist(prev.v, st.v) <= 1e-9 * std::max(1.0, w)) dup = true;
            }
            if (!dup) out.push_back(st);
        }
    }
    return out;
}

int count_components_numeric(const BilliardTable& table, double E, double lambda2,
                             int samples) {
    if (samples < 4) throw std::invalid_argument("need at least 4 samples");
    if (!in_momentum_image(table, E, lambda2, tol::lambda_snap)) {
        throw std::domain_error("empty level");
    }
    const double a = table.a(), b = table.b(), sigma = table.sigma();
    const double lambda1 = a + b - 2.0 * E / sigma - lambda2;
    const double snap = tol::lambda_snap;

    const bool grazing = std::abs(lambda1) <= snap || std::abs(lambda2) <= snap;
    if (grazing) {
        // No reflections on these levels, so winding flips cannot appear
        // inside a trajectory.  Connectivity is decided by the contact
        // family: the clockwise and counterclockwise circles merge exactly
        // where the tangential speed vanishes on the wall.
        const double eps = 1e-9 * std::max(1.0, 2.0 * E);
        double min_w2 = std::numeric_limits<double>::infinity();
        bool populated = false;
        for (int j = 0; j < samples; ++j) {
            const double s = 2.0 * M_PI * j / samples;
            const double w2 = 2.0 * E - sigma * norm2(table.boundary_point(s));
            min_w2 = std::min(min_w2, w2);
            if (w2 > eps) populated = true;
        }
        if (!populated) throw std::domain_error("empty level sample");
        return min_w2 <= eps ? 1 : 2;
    }

    if (std::abs(lambda2 - b) <= snap || std::abs(lambda2 - a) <= snap) {
        throw std::invalid_argument("level must be regular or atom T");
    }

    // Bouncing level: a winding-sign change across the arcs of one short
    // trajectory marks the two winding families as connected.
    const double eps_L = 1e-9 * std::sqrt(2.0 * E * a);
    bool saw_pos = false, saw_neg = false;
    int used = 0;
    for (int j = 0; j < samples; ++j) {
        const double s = 2.0 * M_PI * j / samples;
        for (const PhasePoint& st : boundary_level_states(table, E, lambda2, s)) {
            ++used;
            const Trajectory traj = simulate(table, st, 20);
            int prev = 0;
            for (const Arc& arc : traj.arcs) {
                const double L = cross(arc.start.xi, arc.start.v);
                const int sgn = std::abs(L) <= eps_L ? 0 : (L > 0.0 ? 1 : -1);
                if (sgn == 0 || (prev != 0 && sgn != prev)) return 1;
                prev = sgn;
            }
            (prev > 0 ? saw_pos : saw_neg) = true;
        }
    }
    if (used == 0) throw std::domain_error("empty level sample");
    if (saw_pos && saw_neg) return 2;
    throw std::domain_error("empty level sample");
}

BifurcationComplex bifurcation_complex(const BilliardTable& table) {
    const double a = table.a(), b = table.b(), s = table.sigma();
    BifurcationComplex cx;
    cx.gluing_line = {b, 0.5 * s * a};
    cx.cells = {
        {"hyperbola_sheet", b, a, "",
         {"lambda2=a, E>=sigma*b/2 (atom A)", "lambda1=0, b<lambda2<a (atom T)"}},
        {"ellipse_sheet_ccw", 0.0, b, "+",
         {"lambda2=0, E>=sigma*(a+b)/2 (atom A+)", "lambda1=0, 0<lambda2<b (atom T)"}},
        {"ellipse_sheet_cw", 0.0, b, "-",
         {"lambda2=0, E>=sigma*(a+b)/2 (atom A-)", "lambda1=0, 0<lambda2<b (atom T)"}},
    };
    return cx;
}

StabilityClass classify_stability(const BilliardTable& table, CriticalOrbit orbit) {
    const double a = table.a(), b = table.b(), s = table.sigma();
    double anchor = 0.0;
    switch (orbit) {
        case CriticalOrbit::MinorAxisOrbit: anchor = a; break;
        case CriticalOrbit::MajorAxisOrbit: anchor = b; break;
        case CriticalOrbit::BoundaryLimitOrbit: anchor = 0.0; break;
    }
    // Border-vs-interior dichotomy of the bifurcation complex: the orbit is
    // stable iff each cell touching its half-line meets a separate level-set
    // component there (free border); it is unstable iff several cells share
    // one component (the gluing line).
    const BifurcationComplex cx = bifurcation_complex(table);
    int touching = 0;
    for (const ComplexCell& cell : cx.cells) {
        if (cell.lambda2_lo == anchor || cell.lambda2_hi == anchor) ++touching;
    }
    const double e_probe = s * (a + b);  // inside all three half-lines
    const int components = classify_level(table, e_probe, anchor).components;
    return touching > components ? StabilityClass::Unstable : StabilityClass::Stable;
}

}  // namespace hooke
