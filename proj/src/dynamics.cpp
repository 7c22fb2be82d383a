#include "hooke/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hooke/kernels.hpp"

namespace hooke {

PhasePoint flow(const BilliardTable& table, const PhasePoint& s, double t) {
    const double w = table.omega();
    const double c = std::cos(w * t);
    const double sn = std::sin(w * t);
    return {s.xi * c + s.v * (sn / w), s.v * c - s.xi * (w * sn)};
}

namespace {

// The boundary residual along the flow, (xi(t), A xi(t)) - 1, collapses to a
// single harmonic in theta = 2 w t:
//   f(theta) = offset + c_cos cos(theta) + c_sin sin(theta),
// with one flow period covering theta in [0, 4 pi].
struct Residual {
    double offset, c_cos, c_sin;

    double value(double th) const {
        return offset + c_cos * std::cos(th) + c_sin * std::sin(th);
    }
    double slope(double th) const {
        return -c_cos * std::sin(th) + c_sin * std::cos(th);
    }
    double amplitude() const { return std::hypot(c_cos, c_sin); }
};

Residual make_residual(const BilliardTable& table, const PhasePoint& s) {
    const double P = table.formA(s.xi, s.xi);
    const double R = table.formA(s.v, s.v) / table.sigma();
    const double Q = table.formA(s.xi, s.v) / table.omega();
    return {0.5 * (P + R) - 1.0, 0.5 * (P - R), Q};
}

double polish_root(const Residual& f, double lo, double hi) {
    double fl = f.value(lo);
    double fh = f.value(hi);
    const double lo0 = lo, hi0 = hi;
    double th;
    if ((fl < 0.0) != (fh < 0.0)) {
        for (int i = 0; i < 64 && hi - lo > 4.0 * M_PI * 1e-16; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f.value(mid);
            if (fm == 0.0) { lo = hi = mid; break; }
            if ((fm < 0.0) == (fl < 0.0)) {
                lo = mid;
                fl = fm;
            } else {
                hi = mid;
                fh = fm;
            }
        }
        th = 0.5 * (lo + hi);
    } else {
        // The scan saw a sign change the direct evaluation does not confirm:
        // the root sits within rounding noise of an endpoint.
        th = std::abs(fl) <= std::abs(fh) ? lo0 : hi0;
    }
    // Newton polish, allowed to step marginally outside the scan cell.
    const double margin = 0.5 * (hi0 - lo0);
    double best = std::abs(f.value(th));
    for (int i = 0; i < 8 && best > 0.0; ++i) {
        const double d = f.slope(th);
        if (std::abs(d) < 1e-300) break;
        const double next = th - f.value(th) / d;
        if (next < lo0 - margin || next > hi0 + margin) break;
        const double fn = std::abs(f.value(next));
        if (fn >= best) break;
        th = next;
        best = fn;
    }
    return th;
}

}  // namespace

HitResult next_hit(const BilliardTable& table, const PhasePoint& s,
                   const HitOptions& opt) {
    const double w = table.omega();
    const Residual f = make_residual(table, s);
    const double amp = f.amplitude();
    const double scale = std::max(1.0, std::abs(f.offset) + amp);
    const double graze = opt.grazing_tol * scale;

    const double fmax = f.offset + amp;
    const double fmin = f.offset - amp;
    if (fmax < -graze || fmin > graze) {
        // The flow ellipse misses the wall entirely (inside or outside).
        throw std::domain_error("state not in billiard domain");
    }

    // Outgoing boundary starts must move inward or tangentially.  Contact
    // states of grazing flows legitimately carry noise-level outward
    // components (of order sqrt(amp * |fmax|)), so they are exempt.
    if (std::abs(fmax) > graze) {
        const Vec2 n0 = table.applyA(s.xi);
        if (table.on_boundary(s.xi) &&
            dot(s.v, n0) > 1e-9 * std::max(1e-300, norm(s.v) * norm(n0))) {
            throw std::domain_error("state not in billiard domain");
        }
    }

    const int n = opt.scan_samples;
    const double step = 4.0 * M_PI / n;
    const double theta_min = 4.0 * M_PI * opt.t_min_frac;

    std::vector<double> buf(static_cast<std::size_t>(n) + 1);
    kernels::boundary_residual_scan({f.offset, f.c_cos, f.c_sin, step}, buf);

    auto accept = [&](double th) -> bool {
        // Keep arrivals (up-crossings); drop the departure root of a boundary
        // start, which sits below theta_min with the flow still outgoing.
        if (th < 0.0) return false;
        const double d = f.slope(th);
        if (th <= theta_min) return d > 1e-6 * amp;
        return d >= -1e-9 * amp;
    };

    auto make_hit = [&](double th) -> HitResult {
        const double t = th / (2.0 * w);
        const bool tangential = std::abs(f.slope(th)) <= 1e-7 * amp;
        return {t, flow(table, s, t), tangential};
    };

    for (int k = 0; k < n; ++k) {
        if (buf[k] == 0.0) {
            const double th = k * step;
            if (accept(th)) return make_hit(th);
            continue;
        }
        if (buf[k] * buf[k + 1] < 0.0) {
            const double th = polish_root(f, k * step, (k + 1) * step);
            if (accept(th)) return make_hit(th);
        }
    }

    // No transversal crossing resolved by the grid.  The flow residual is a
    // single harmonic, so its extrema are known in closed form; use them
    // either as the tangency point (lambda1 = 0 limit, non-reflecting) or to
    // recover a crossing pair narrower than one scan cell (whispering states
    // dip inside the wall only over ~sqrt(|fmin|/amp) radians).
    double th_peak = std::atan2(f.c_sin, f.c_cos);
    if (th_peak < 0.0) th_peak += 2.0 * M_PI;

    if (std::abs(fmax) <= graze) {
        // A grazing boundary start sits at a contact point, where the peak
        // estimate lands within noise of 0; the next contact is then half a
        // flow period away.
        const double th = th_peak <= 1e-3 ? th_peak + 2.0 * M_PI : th_peak;
        const double t = th / (2.0 * w);
        return {t, flow(table, s, t), true};
    }

    const double th_trough =
        th_peak + M_PI < 2.0 * M_PI ? th_peak + M_PI : th_peak - M_PI;
    double extrema[4] = {th_peak, th_trough, th_peak + 2.0 * M_PI,
                         th_trough + 2.0 * M_PI};
    std::sort(std::begin(extrema), std::end(extrema));
    for (double th_m : extrema) {
        const double fm = f.value(th_m);
        if (fm > 0.0 && f.value(th_m - step) < 0.0) {
            const double th = polish_root(f, th_m - step, th_m);
            if (accept(th)) return make_hit(th);
        }
        if (fm < 0.0 && f.value(th_m + step) > 0.0) {
            const double th = polish_root(f, th_m, th_m + step);
            if (accept(th)) return make_hit(th);
        }
    }
    throw std::domain_error("state not in billiard domain");
}

PhasePoint reflect(const BilliardTable& table, const PhasePoint& hit) {
    const Vec2 n = table.applyA(hit.xi);
    const double nn = dot(n, n);
    const double incoming = dot(hit.v, n);
    if (incoming < -1e-9 * std::max(1e-300, norm(hit.v) * std::sqrt(nn))) {
        throw std::domain_error("not an incoming state");
    }
    return {hit.xi, hit.v - (2.0 * incoming / nn) * n};
}

PhasePoint closed_form_map(const BilliardTable& table, const PhasePoint& s) {
    const double sigma = table.sigma();
    const double vAv = table.formA(s.v, s.v);
    const double xiAv = table.formA(s.xi, s.v);
    const double nu =
        std::sqrt(4.0 * sigma * xiAv * xiAv + (sigma - vAv) * (sigma - vAv));
    if (nu <= 1e-12 * (sigma + std::abs(vAv))) {
        throw std::domain_error("singular map point");
    }

    Vec2 xt = (-1.0 / nu) * (sigma * s.xi - vAv * s.xi + 2.0 * xiAv * s.v);
    Vec2 u = (-1.0 / nu) * (sigma * s.v - vAv * s.v - 2.0 * sigma * xiAv * s.xi);

    // mu from the pre-reflection velocity; reflection negates the normal
    // component, so this matches the defining identity for the reflected one.
    const Vec2 Axt = table.applyA(xt);
    const double mu = -2.0 * dot(u, Axt) / dot(Axt, Axt);
    Vec2 vt = u + mu * Axt;

    // The formulas determine the image up to (xi, v) -> (-xi, -v); pin the
    // branch against the geometric bounce.
    const HitResult geo = next_hit(table, s);
    const PhasePoint geo_out = geo.grazing ? geo.state : reflect(table, geo.state);
    if (dist(-1.0 * xt, geo_out.xi) < dist(xt, geo_out.xi)) {
        xt = -xt;
        vt = -vt;
    }
    return {xt, vt};
}

Trajectory simulate(const BilliardTable& table, const PhasePoint& initial,
                    int n_bounces, const HitOptions& opt) {
    if (n_bounces < 0) throw std::invalid_argument("bounce count must be >= 0");
    Trajectory traj{table, {}, {}, {}};
    traj.arcs.reserve(n_bounces);
    traj.bounce_points.reserve(n_bounces);

    PhasePoint cur = initial;
    double t_total = 0.0;
    for (int k = 0; k < n_bounces; ++k) {
        HitResult hit;
        try {
            hit = next_hit(table, cur, opt);
        } catch (const std::domain_error& e) {
            throw std::domain_error(std::string(e.what()) + " (bounce " +
                                    std::to_string(k) + ")");
        }
        traj.arcs.push_back({cur, hit.t, hit.state,
                             FlowEllipse::from_state(cur.xi, cur.v, table.omega())});
        t_total += hit.t;
        const PhasePoint out = hit.grazing ? hit.state : reflect(table, hit.state);
        traj.bounce_points.push_back(out);
        traj.bounce_times.push_back(t_total);
        cur = out;
    }
    return traj;
}

}  // namespace hooke
