#pragma once

#include <vector>

#include "hooke/conics.hpp"

namespace hooke {

/// Position-velocity pair.  Boundary states are stored with the outgoing
/// (post-reflection) velocity; that choice makes the bounce map a map rather
/// than a relation on the wall.
struct PhasePoint {
    Vec2 xi;
    Vec2 v;
};

/// One inter-bounce piece of trajectory: exact harmonic flow from `start`
/// (boundary or interior, outgoing) for `duration`, ending at the wall with
/// the pre-reflection velocity in `end`.
struct Arc {
    PhasePoint start;
    double duration = 0.0;
    PhasePoint end;
    FlowEllipse flow_ellipse;
};

struct Trajectory {
    BilliardTable table;
    std::vector<Arc> arcs;
    std::vector<PhasePoint> bounce_points;  // outgoing representatives
    std::vector<double> bounce_times;       // cumulative
};

/// Exact solution of xi'' = -sigma xi.
PhasePoint flow(const BilliardTable& table, const PhasePoint& s, double t);

struct HitOptions {
    int scan_samples = 1024;       // per flow period
    double residual_tol = tol::hit_residual;
    double t_min_frac = 1e-9;      // departure-root exclusion, fraction of the period
    double grazing_tol = 1e-10;    // |max residual| treated as tangential contact
};

struct HitResult {
    double t;          // time of flight to the wall
    PhasePoint state;  // on the wall, pre-reflection velocity
    bool grazing;      // tangential contact (lambda1 = 0 limit), no reflection
};

/// First boundary crossing of the flow from `s`.  Scans one flow period at
/// `scan_samples` points for sign changes of the boundary residual, then
/// polishes by bisection + Newton.  Throws "state not in billiard domain"
/// when the flow never meets the wall.
HitResult next_hit(const BilliardTable& table, const PhasePoint& s,
                   const HitOptions& opt = {});

/// Billiard reflection law: u -> u - 2 (u, A xi)/(A xi, A xi) A xi.
/// Requires the incoming normal component to be nonnegative (grazing allowed).
PhasePoint reflect(const BilliardTable& table, const PhasePoint& hit);

/// Closed-form bounce map on outgoing boundary states, with the overall sign
/// branch resolved against the geometric map next_hit + reflect.
/// Throws "singular map point" when the normalization nu vanishes.
PhasePoint closed_form_map(const BilliardTable& table, const PhasePoint& s);

/// Chains next_hit and reflect n times from `initial` (interior or outgoing
/// boundary state in M_B), recording arcs and outgoing bounce states.
Trajectory simulate(const BilliardTable& table, const PhasePoint& initial,
                    int n_bounces, const HitOptions& opt = {});

}  // namespace hooke
