#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hooke/dynamics.hpp"
#include "hooke/integrability.hpp"

namespace hooke {

/// Level-set types occurring in this system.  A and B are the standard
/// Fomenko atoms; T (torus of closed orbits) and Eight (figure-eight times a
/// circle, closed orbits only) are the non-standard singular sets.
enum class FomenkoAtom { A, B, T, Eight };
const char* to_string(FomenkoAtom a);

/// Isoenergy bands, split at sigma*b/2, sigma*a/2, sigma*(a+b)/2.
enum class EnergyBand {
    Ground,      // E = sigma b / 2, single orbit
    LowBand,     // sigma b/2 < E < sigma a/2
    EightLevel,  // E = sigma a / 2
    MiddleBand,  // sigma a/2 < E < sigma (a+b)/2
    HighBand     // E >= sigma (a+b)/2
};
const char* to_string(EnergyBand b);

EnergyBand energy_band(const BilliardTable& table, double E,
                       double tol = tol::energy_snap);

struct FomenkoVertex {
    FomenkoAtom atom;
    double lambda2;     // anchor into the bifurcation diagram
    std::string label;  // A | B | T | 8, with A+/A- for the two winding A's
};

struct FomenkoEdge {
    int from, to;  // vertex ids; ordered from the lambda2 = b side outward
    std::optional<double> r;
    std::optional<int> eps;
};

struct FomenkoFamily {
    std::vector<int> members;
    std::optional<int> n;
};

struct FomenkoGraph {
    EnergyBand band;
    double energy;
    std::vector<FomenkoVertex> vertices;
    std::vector<FomenkoEdge> edges;
    std::vector<FomenkoFamily> families;
};

/// The Fomenko graph of the isoenergy manifold at E.  Marks r, eps, n are
/// populated in the high band only; lower bands carry none.
/// Throws "empty isoenergy manifold" for E below sigma b / 2.
FomenkoGraph fomenko_graph(const BilliardTable& table, double E,
                           double tol = tol::energy_snap);

/// A critical half-line {lambda2 = const, E >= e_min} of the momentum map.
struct HalfLine {
    double lambda2;
    double e_min;
};

/// The bifurcation set: {l2=a, E>=sb/2}, {l2=b, E>=sa/2}, {l2=0, E>=s(a+b)/2}.
std::array<HalfLine, 3> bifurcation_set(const BilliardTable& table);

bool on_bifurcation_set(const BilliardTable& table, double E, double lambda2,
                        double tol = tol::lambda_snap);

/// Whether (E, lambda2) lies in the closed image of the momentum map:
/// 0 <= lambda2 <= a and lambda2 + 2E/sigma >= a + b.
bool in_momentum_image(const BilliardTable& table, double E, double lambda2,
                       double tol = tol::lambda_snap);

struct LevelClass {
    std::optional<FomenkoAtom> atom;  // absent on regular levels
    int components;
};

/// Atom / regularity and connected-component count of the joint level set at
/// (E, lambda2).  Throws "empty level" outside the momentum-map image.
LevelClass classify_level(const BilliardTable& table, double E, double lambda2,
                          double tol = tol::lambda_snap);

/// Outgoing boundary states with invariants (E, lambda2) at the boundary
/// point of parameter angle s.  Empty when that boundary point is not visited
/// by the level.  Grazing levels (lambda1 = 0 or lambda2 = 0) yield the
/// tangential states.
std::vector<PhasePoint> boundary_level_states(const BilliardTable& table,
                                              double E, double lambda2, double s);

/// Independent component count.  Bouncing levels: winding signs of short
/// simulated trajectories (a sign change inside one trajectory means the two
/// winding families are connected).  Grazing levels carry no reflections, so
/// connectivity is read off the tangential-contact family instead: the two
/// winding circles merge exactly where the tangential speed vanishes.
/// Supports regular and T levels plus the grazing critical levels (the 8
/// level and lambda2 = 0); rejects other critical levels.
int count_components_numeric(const BilliardTable& table, double E, double lambda2,
                             int samples = 64);

/// One 2-cell of the bifurcation complex.
struct ComplexCell {
    std::string id;
    double lambda2_lo, lambda2_hi;       // caustic regime of the cell
    std::string winding;                 // "+", "-", or "" (mixed)
    std::vector<std::string> border_arcs;  // free boundary arcs
};

struct BifurcationComplex {
    std::vector<ComplexCell> cells;
    HalfLine gluing_line;  // common to every cell
};

/// Three 2-cells (one hyperbola-caustic sheet, two ellipse-caustic sheets,
/// one per winding) glued along {lambda2 = b, E >= sigma a / 2}.
BifurcationComplex bifurcation_complex(const BilliardTable& table);

enum class CriticalOrbit { MinorAxisOrbit, MajorAxisOrbit, BoundaryLimitOrbit };
enum class StabilityClass { Stable, Unstable };
const char* to_string(StabilityClass s);

/// Orbital stability read off the bifurcation complex: free-border orbit
/// families are stable, the shared gluing line is not.
StabilityClass classify_stability(const BilliardTable& table, CriticalOrbit orbit);

}  // namespace hooke
