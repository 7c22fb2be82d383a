#include "hooke/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "hooke/foliation.hpp"
#include "hooke/io.hpp"
#include "hooke/kernels.hpp"

namespace hooke {

bool VerificationReport::all_pass() const {
    for (const PropertyResult& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const BilliardTable& base_table() {
    static const BilliardTable t{2.0, 1.0, 1.0};
    return t;
}

std::vector<BilliardTable> graph_tables() {
    return {BilliardTable{2.0, 1.0, 1.0}, BilliardTable{5.0, 1.5, 0.7},
            BilliardTable{3.3, 2.5, 2.1}};
}

// ------ samples shared by the sum-rule / sign / diagram properties ------

struct DomainSamples {
    BilliardTable table;
    std::vector<double> x, y, vx, vy;
    std::vector<double> E, p0, l1, l2;
};

std::vector<DomainSamples> make_domain_samples(std::uint64_t seed,
                                               std::size_t n_tables,
                                               std::size_t n_each) {
    Rng rng(seed);
    std::vector<DomainSamples> out;
    out.reserve(n_tables);
    for (std::size_t i = 0; i < n_tables; ++i) {
        DomainSamples ds{random_table(rng), {}, {}, {}, {}, {}, {}, {}, {}};
        ds.x.reserve(n_each);
        for (std::size_t k = 0; k < n_each; ++k) {
            const PhasePoint s = random_domain_state(ds.table, rng);
            ds.x.push_back(s.xi.x);
            ds.y.push_back(s.xi.y);
            ds.vx.push_back(s.v.x);
            ds.vy.push_back(s.v.y);
        }
        ds.E.resize(n_each);
        ds.p0.resize(n_each);
        ds.l1.resize(n_each);
        ds.l2.resize(n_each);
        kernels::state_invariants_batch(
            ds.table, {ds.x, ds.y, ds.vx, ds.vy, ds.E, ds.p0, ds.l1, ds.l2});
        out.push_back(std::move(ds));
    }
    return out;
}

double sum_rule_worst(const std::vector<DomainSamples>& samples) {
    double worst = 0.0;
    for (const DomainSamples& ds : samples) {
        const double target = ds.table.a() + ds.table.b();
        const double inv_sigma = 1.0 / ds.table.sigma();
        for (std::size_t k = 0; k < ds.E.size(); ++k) {
            const double lhs = ds.l1[k] + ds.l2[k];
            const double rhs = target - 2.0 * ds.E[k] * inv_sigma;
            worst = std::max(worst,
                             std::abs(lhs - rhs) / std::max(1.0, std::abs(target)));
        }
    }
    return worst;
}

double outer_sign_worst(const std::vector<DomainSamples>& samples) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const DomainSamples& ds : samples) {
        for (double l1 : ds.l1) worst = std::max(worst, l1);
    }
    return worst;
}

// ------ geometry helpers for the focal properties ------

double arc_min_distance(const BilliardTable& table, const Arc& arc, Vec2 target) {
    auto d2 = [&](double t) { return norm2(flow(table, arc.start, t).xi - target); };
    const int n = 256;
    double best = d2(0.0);
    int best_k = 0;
    for (int k = 1; k <= n; ++k) {
        const double v = d2(arc.duration * k / n);
        if (v < best) { best = v; best_k = k; }
    }
    double lo = arc.duration * std::max(0, best_k - 1) / n;
    double hi = arc.duration * std::min(n, best_k + 1) / n;
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = d2(x1), f2 = d2(x2);
    for (int i = 0; i < 60; ++i) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - inv_phi * (hi - lo); f1 = d2(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + inv_phi * (hi - lo); f2 = d2(x2);
        }
    }
    return std::sqrt(std::min({best, f1, f2}));
}

// Times in [0, duration] where the arc crosses the x-axis.
std::vector<double> arc_axis_crossings(const BilliardTable& table, const Arc& arc) {
    const double w = table.omega();
    const double ay = arc.start.xi.y;
    const double by = arc.start.v.y / w;
    const double amp = std::hypot(ay, by);
    std::vector<double> out;
    if (amp <= 0.0) return out;
    const double phi = std::atan2(by, ay);  // y(t) = amp cos(w t - phi)
    const int k_lo = static_cast<int>(std::floor((-phi - 0.5 * M_PI) / M_PI)) - 1;
    const int k_hi = static_cast<int>(std::ceil((w * arc.duration - phi) / M_PI)) + 1;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double t = (phi + 0.5 * M_PI + k * M_PI) / w;
        if (t >= -1e-12 && t <= arc.duration + 1e-12) {
            out.push_back(std::clamp(t, 0.0, arc.duration));
        }
    }
    return out;
}

// ------ expected Fomenko structures, band by band ------

struct GraphShape {
    std::vector<std::string> vertex_labels;                   // sorted
    std::vector<std::pair<std::string, std::string>> edges;   // label pairs, sorted
    bool marks;                                               // r=0/eps=1/n=-1 present
};

GraphShape shape_of(const FomenkoGraph& g) {
    GraphShape s;
    for (const FomenkoVertex& v : g.vertices) s.vertex_labels.push_back(v.label);
    std::sort(s.vertex_labels.begin(), s.vertex_labels.end());
    for (const FomenkoEdge& e : g.edges) {
        std::string u = g.vertices[e.from].label;
        std::string v = g.vertices[e.to].label;
        if (v < u) std::swap(u, v);
        s.edges.emplace_back(u, v);
    }
    std::sort(s.edges.begin(), s.edges.end());
    s.marks = false;
    for (const FomenkoEdge& e : g.edges) {
        if (e.r || e.eps) s.marks = true;
    }
    return s;
}

bool marks_exact_high_band(const FomenkoGraph& g) {
    if (g.edges.size() != 3 || g.families.size() != 1) return false;
    for (const FomenkoEdge& e : g.edges) {
        if (!e.r || !e.eps || *e.r != 0.0 || *e.eps != 1) return false;
    }
    const FomenkoFamily& fam = g.families.front();
    if (!fam.n || *fam.n != -1 || fam.members.size() != 1) return false;
    return g.vertices[fam.members.front()].atom == FomenkoAtom::B;
}

bool graph_matches(const FomenkoGraph& g, const GraphShape& want) {
    const GraphShape got = shape_of(g);
    return got.vertex_labels == want.vertex_labels && got.edges == want.edges &&
           got.marks == want.marks &&
           (!want.marks || marks_exact_high_band(g)) &&
           (want.marks ? !g.families.empty() : g.families.empty());
}

}  // namespace

VerificationReport run_verification(const VerifyConfig& cfg) {
    VerificationReport report;
    const auto suite_start = Clock::now();

    auto run = [&](const char* name, auto&& body) {
        PropertyResult res;
        res.name = name;
        const auto t0 = Clock::now();
        try {
            body(res);
        } catch (const std::exception& e) {
            res.pass = false;
            res.note = std::string("exception: ") + e.what();
        }
        res.seconds = seconds_since(t0);
        report.results.push_back(std::move(res));
    };

    const std::size_t n_tables = 10;
    const std::size_t n_each = cfg.fast ? 1000 : 10000;
    const auto samples = make_domain_samples(cfg.seed, n_tables, n_each);

    // 1. Sum rule lambda1 + lambda2 = a + b - 2E/sigma.
    double c1_worst = 0.0;
    run("01 caustic sum rule", [&](PropertyResult& r) {
        const auto t0 = Clock::now();
        c1_worst = sum_rule_worst(samples);
        r.worst = c1_worst;
        r.tolerance = 1e-12;
        r.samples = n_tables * n_each;
        const double elapsed = seconds_since(t0);
        r.pass = r.worst <= r.tolerance && elapsed < 5.0;
        if (elapsed >= 5.0) r.note = "over 5 s budget";
    });

    // 2. Outer caustic sign lambda1 <= 0.
    double c2_worst = 0.0;
    run("02 outer caustic sign", [&](PropertyResult& r) {
        c2_worst = outer_sign_worst(samples);
        r.worst = c2_worst;
        r.tolerance = 1e-12;
        r.samples = n_tables * n_each;
        r.pass = r.worst <= r.tolerance;
    });

    // 3. Caustic and Lax-determinant invariance along trajectories.
    run("03 caustic/Lax invariance", [&](PropertyResult& r) {
        const auto t0 = Clock::now();
        const BilliardTable& table = base_table();
        Rng rng(cfg.seed + 3);
        const int n_traj = cfg.fast ? 10 : 100;
        const int n_bounce = cfg.fast ? 100 : 1000;
        const double drift_tol =
            cfg.caustic_drift_tol > 0.0 ? cfg.caustic_drift_tol : 1e-8;
        const double det_tol = 1e-10;
        // Margin keeps the draw away from the measure-zero grazing boundary,
        // where root conditioning degrades; see the hit-solver notes.
        const double margin =
            1e-6 * table.a() * table.b() * table.sigma();
        const auto probes = probe_lambdas(table);

        double caustic_drift = 0.0, det_drift = 0.0;
        for (int i = 0; i < n_traj; ++i) {
            const PhasePoint st = random_boundary_state(table, rng, margin);
            const CausticPair cp0 = caustics(table, st);
            std::array<double, 5> det0;
            for (std::size_t j = 0; j < probes.size(); ++j) {
                det0[j] = lax_L(table, st, probes[j]).det();
            }
            const Trajectory traj = simulate(table, st, n_bounce);
            for (const PhasePoint& p : traj.bounce_points) {
                const CausticPair cp = caustics(table, p);
                caustic_drift = std::max({caustic_drift,
                                          std::abs(cp.lambda1 - cp0.lambda1),
                                          std::abs(cp.lambda2 - cp0.lambda2)});
                for (std::size_t j = 0; j < probes.size(); ++j) {
                    det_drift = std::max(det_drift,
                                         std::abs(lax_L(table, p, probes[j]).det() -
                                                  det0[j]));
                }
            }
        }
        r.worst = caustic_drift;
        r.tolerance = drift_tol;
        r.samples = static_cast<std::size_t>(n_traj) * n_bounce;
        const double elapsed = seconds_since(t0);
        r.pass = caustic_drift <= drift_tol && det_drift <= det_tol && elapsed < 20.0;
        std::ostringstream note;
        note << "detL drift " << format_g17(det_drift) << " (tol 1e-10)";
        if (elapsed >= 20.0) note << ", over 20 s budget";
        r.note = note.str();
    });

    // 4. Closed-form bounce map against the geometric solver.
    run("04 closed-form map vs geometric", [&](PropertyResult& r) {
        const BilliardTable& table = base_table();
        Rng rng(cfg.seed + 4);
        const int n = cfg.fast ? 1000 : 10000;
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            const PhasePoint st = random_boundary_state(table, rng);
            const PhasePoint alg = closed_form_map(table, st);
            const HitResult hit = next_hit(table, st);
            const PhasePoint geo = hit.grazing ? hit.state : reflect(table, hit.state);
            worst = std::max({worst, dist(alg.xi, geo.xi), dist(alg.v, geo.v)});
        }
        r.worst = worst;
        r.tolerance = 1e-9;
        r.samples = n;
        r.pass = worst <= r.tolerance;
    });

    // 5. Focal alternation on lambda2 = b trajectories.
    run("05 focal alternation", [&](PropertyResult& r) {
        const BilliardTable& table = base_table();
        Rng rng(cfg.seed + 5);
        const int n_traj = cfg.fast ? 10 : 50;
        const auto [f_plus, f_minus] = table.foci();
        double worst = 0.0;
        int built = 0;
        for (int i = 0; i < n_traj; ++i) {
            const double E =
                0.5 * table.sigma() * table.a() * (1.05 + rng.uniform(0.0, 1.0));
            PhasePoint st{};
            bool found = false;
            for (int tries = 0; tries < 64 && !found; ++tries) {
                const auto states = boundary_level_states(
                    table, E, table.b(), rng.uniform(0.0, 2.0 * M_PI));
                if (!states.empty()) { st = states.front(); found = true; }
            }
            if (!found) continue;
            ++built;
            const Trajectory traj = simulate(table, st, 8);
            int side = 0;  // +1 for F+, -1 for F-
            for (const Arc& arc : traj.arcs) {
                const double dp = arc_min_distance(table, arc, f_plus);
                const double dm = arc_min_distance(table, arc, f_minus);
                if (side == 0) {
                    worst = std::max(worst, std::min(dp, dm));
                    side = dp <= dm ? 1 : -1;
                } else {
                    // Must now pass near the opposite focus.
                    worst = std::max(worst, side > 0 ? dm : dp);
                    side = -side;
                }
            }
        }
        r.worst = worst;
        r.tolerance = 1e-6;
        r.samples = built;
        r.pass = built == n_traj && worst <= r.tolerance;
        if (built != n_traj) r.note = "failed to construct all trajectories";
    });

    // 6. Focal-segment crossing dichotomy.
    run("06 focal segment dichotomy", [&](PropertyResult& r) {
        const BilliardTable& table = base_table();
        Rng rng(cfg.seed + 6);
        const int n_traj = cfg.fast ? 10 : 50;
        const double c = table.focal_half_distance();
        const double span = table.a() - table.b();
        double worst_margin = -std::numeric_limits<double>::infinity();
        bool ok = true;
        int built = 0;

        auto build = [&](double lambda2) -> Trajectory {
            const double lambda1 = -span * rng.uniform(0.05, 1.0);
            const double E = 0.5 * table.sigma() *
                             (table.a() + table.b() - lambda1 - lambda2);
            for (int tries = 0; tries < 64; ++tries) {
                const auto states = boundary_level_states(
                    table, E, lambda2, rng.uniform(0.0, 2.0 * M_PI));
                if (!states.empty()) {
                    ++built;
                    return simulate(table, states.front(), 20);
                }
            }
            return {table, {}, {}, {}};
        };

        for (int i = 0; i < n_traj; ++i) {
            // Hyperbola caustic: every arc crosses the open focal segment.
            const Trajectory ht = build(table.b() + span * rng.uniform(0.15, 0.85));
            if (ht.arcs.empty()) { ok = false; continue; }
            for (const Arc& arc : ht.arcs) {
                const auto ts = arc_axis_crossings(table, arc);
                bool inside = false;
                for (double t : ts) {
                    const double xc = std::abs(flow(table, arc.start, t).xi.x);
                    worst_margin = std::max(worst_margin, xc - c);
                    if (xc < c) inside = true;
                }
                if (!inside) ok = false;
            }
            // Ellipse caustic: no arc crosses it.
            const Trajectory et = build(table.b() * rng.uniform(0.15, 0.85));
            if (et.arcs.empty()) { ok = false; continue; }
            for (const Arc& arc : et.arcs) {
                for (double t : arc_axis_crossings(table, arc)) {
                    const double xc = std::abs(flow(table, arc.start, t).xi.x);
                    if (xc < c) { ok = false; worst_margin = std::max(worst_margin, c - xc); }
                }
            }
        }
        r.worst = worst_margin;
        r.tolerance = 0.0;
        r.samples = built;
        r.pass = ok && built == 2 * n_traj;
        r.note = "crossing |x| - c margin (hyperbola side)";
    });

    // 7. Fomenko graphs for every band, three tables.
    run("07 Fomenko graphs", [&](PropertyResult& r) {
        const GraphShape ground{{"A"}, {}, false};
        const GraphShape low{{"A", "T"}, {{"A", "T"}}, false};
        const GraphShape eight{{"8", "A"}, {{"8", "A"}}, false};
        const GraphShape middle{{"A", "B", "T", "T"},
                                {{"A", "B"}, {"B", "T"}, {"B", "T"}},
                                false};
        const GraphShape high{{"A", "A+", "A-", "B"},
                              {{"A", "B"}, {"A+", "B"}, {"A-", "B"}},
                              true};
        int mismatches = 0;
        int checked = 0;
        for (const BilliardTable& t : graph_tables()) {
            const double e1 = 0.5 * t.sigma() * t.b();
            const double e2 = 0.5 * t.sigma() * t.a();
            const double e3 = 0.5 * t.sigma() * (t.a() + t.b());
            const std::pair<double, const GraphShape*> cases[] = {
                {e1, &ground},          {0.5 * (e1 + e2), &low},
                {e2, &eight},           {0.5 * (e2 + e3), &middle},
                {e3, &high},            {1.5 * e3, &high},
            };
            for (const auto& [E, want] : cases) {
                ++checked;
                const FomenkoGraph g = fomenko_graph(t, E);
                if (!graph_matches(g, *want)) ++mismatches;
                // Anchors must sit on the critical values.
                for (const FomenkoVertex& v : g.vertices) {
                    if (v.atom == FomenkoAtom::A && v.label == "A" &&
                        std::abs(v.lambda2 - t.a()) > 1e-12) ++mismatches;
                    if (v.atom == FomenkoAtom::B &&
                        std::abs(v.lambda2 - t.b()) > 1e-12) ++mismatches;
                }
            }
        }
        r.worst = mismatches;
        r.tolerance = 0.0;
        r.samples = checked;
        r.pass = mismatches == 0;
    });

    // 8. Numeric component counts against the classification.
    run("08 level component counts", [&](PropertyResult& r) {
        const auto t0 = Clock::now();
        Rng rng(cfg.seed + 8);
        const auto tables = graph_tables();
        const int quota_full[6] = {20, 20, 20, 20, 10, 10};
        const int quota_fast[6] = {6, 6, 6, 6, 3, 3};
        const int* quota = cfg.fast ? quota_fast : quota_full;
        const int total = cfg.fast ? 30 : 100;
        int checked = 0, mismatches = 0;
        for (int regime = 0; regime < 6 && checked < total; ++regime) {
            for (int i = 0; i < quota[regime] && checked < total; ++i) {
                const BilliardTable& t = tables[checked % tables.size()];
                const double a = t.a(), b = t.b(), s = t.sigma();
                const double span = a - b;
                double E = 0.0, l2 = 0.0;
                switch (regime) {
                    case 0:  // regular, hyperbola caustic
                        l2 = b + span * rng.uniform(0.15, 0.85);
                        E = 0.5 * s * (a + b - l2 + span * rng.uniform(0.05, 1.0));
                        break;
                    case 1:  // regular, ellipse caustic
                        l2 = b * rng.uniform(0.15, 0.85);
                        E = 0.5 * s * (a + b - l2 + b * rng.uniform(0.05, 1.0));
                        break;
                    case 2:  // atom T, hyperbola caustic
                        l2 = b + span * rng.uniform(0.15, 0.85);
                        E = 0.5 * s * (a + b - l2);
                        break;
                    case 3:  // atom T, ellipse caustic
                        l2 = b * rng.uniform(0.15, 0.85);
                        E = 0.5 * s * (a + b - l2);
                        break;
                    case 4:  // the figure-eight level
                        l2 = b;
                        E = 0.5 * s * a;
                        break;
                    case 5:  // boundary-limit level
                        l2 = 0.0;
                        E = 0.5 * s * (a + b) * (1.05 + rng.uniform(0.0, 1.0));
                        break;
                }
                ++checked;
                const LevelClass want = classify_level(t, E, l2);
                const int got = count_components_numeric(t, E, l2, 64);
                if (got != want.components) ++mismatches;
            }
        }
        r.worst = mismatches;
        r.tolerance = 0.0;
        r.samples = checked;
        const double elapsed = seconds_since(t0);
        r.pass = mismatches == 0 && checked >= total && elapsed < 20.0;
        if (elapsed >= 20.0) r.note = "over 20 s budget";
    });

    // 9. Momentum-map image region and the diagram corners.
    run("09 bifurcation diagram region", [&](PropertyResult& r) {
        double worst = 0.0;
        for (const DomainSamples& ds : samples) {
            const double a = ds.table.a(), b = ds.table.b(), s = ds.table.sigma();
            for (std::size_t k = 0; k < ds.E.size(); ++k) {
                worst = std::max(worst, -ds.l2[k]);
                worst = std::max(worst, ds.l2[k] - a);
                worst = std::max(worst, (a + b) - ds.l2[k] - 2.0 * ds.E[k] / s);
            }
        }
        double corner_worst = 0.0;
        for (const BilliardTable& t : graph_tables()) {
            const double corners[3][2] = {
                {0.5 * t.sigma() * t.b(), t.a()},
                {0.5 * t.sigma() * t.a(), t.b()},
                {0.5 * t.sigma() * (t.a() + t.b()), 0.0}};
            const auto probes = corner_probe_states(t, 1e-4);
            for (int i = 0; i < 3; ++i) {
                const InvariantData m = momentum_map(t, probes[i]);
                corner_worst = std::max(
                    corner_worst, std::hypot(m.E - corners[i][0],
                                             m.lambda2 - corners[i][1]));
            }
        }
        r.worst = std::max(worst, corner_worst);
        r.tolerance = 1e-3;  // corner grid tolerance; inequalities hold to 1e-9
        r.samples = n_tables * n_each + 9;
        r.pass = worst <= 1e-9 && corner_worst <= 1e-3;
        std::ostringstream note;
        note << "region slack " << worst << ", corner dist " << corner_worst;
        r.note = note.str();
    });

    // 10. Bifurcation complex and orbit stability.
    run("10 complex and stability", [&](PropertyResult& r) {
        int bad = 0;
        for (const BilliardTable& t : graph_tables()) {
            const BifurcationComplex cx = bifurcation_complex(t);
            if (cx.cells.size() != 3) ++bad;
            if (cx.gluing_line.lambda2 != t.b() ||
                cx.gluing_line.e_min != 0.5 * t.sigma() * t.a()) ++bad;
            int border_a = 0, border_0 = 0;
            for (const ComplexCell& cell : cx.cells) {
                if (cell.lambda2_hi == t.a()) ++border_a;
                if (cell.lambda2_lo == 0.0) ++border_0;
            }
            if (border_a != 1 || border_0 != 2) ++bad;
            if (classify_stability(t, CriticalOrbit::MinorAxisOrbit) !=
                StabilityClass::Stable) ++bad;
            if (classify_stability(t, CriticalOrbit::BoundaryLimitOrbit) !=
                StabilityClass::Stable) ++bad;
            if (classify_stability(t, CriticalOrbit::MajorAxisOrbit) !=
                StabilityClass::Unstable) ++bad;
        }
        r.worst = bad;
        r.tolerance = 0.0;
        r.samples = 3;
        r.pass = bad == 0;
    });

    // 11. Budget and determinism of the suite itself.
    run("11 runtime and determinism", [&](PropertyResult& r) {
        const double elapsed = seconds_since(suite_start);
        const auto redo = make_domain_samples(cfg.seed, n_tables, n_each);
        const bool same = sum_rule_worst(redo) == c1_worst &&
                          outer_sign_worst(redo) == c2_worst;
        // The elapsed time is available through the timing channel only; the
        // deterministic report carries just the mismatch indicator.
        r.worst = same ? 0.0 : 1.0;
        r.tolerance = 0.0;
        r.samples = report.results.size();
        r.pass = elapsed <= cfg.time_budget_seconds && same;
        r.note = same ? "resampled streams identical, within time budget"
                      : "determinism failure";
        if (elapsed > cfg.time_budget_seconds) r.note = "over time budget";
    });

    report.total_seconds = seconds_since(suite_start);
    return report;
}

void print_report(const VerificationReport& report, std::ostream& os) {
    for (const PropertyResult& r : report.results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
           << "  worst=" << format_g17(r.worst)
           << " tol=" << format_g17(r.tolerance) << " samples=" << r.samples;
        if (!r.note.empty()) os << "  (" << r.note << ")";
        os << "\n";
    }
    os << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
}

void print_timings(const VerificationReport& report, std::ostream& os) {
    for (const PropertyResult& r : report.results) {
        os << r.name << ": " << r.seconds << " s\n";
    }
    os << "total: " << report.total_seconds << " s\n";
}

}  // namespace hooke
