#pragma once

#include <array>

#include "hooke/conics.hpp"
#include "hooke/dynamics.hpp"

namespace hooke {

/// Total energy v^2/2 + sigma xi^2/2 (unit mass).
inline double energy(const BilliardTable& table, const PhasePoint& s) {
    return 0.5 * norm2(s.v) + 0.5 * table.sigma() * norm2(s.xi);
}

/// Bilinear form of the confocal pencil:
///   q_lambda(u, w) = u1 w1/(a - lambda) + u2 w2/(b - lambda).
/// Throws "pole of q" at lambda in {a, b}.
double confocal_form(const BilliardTable& table, double lambda, Vec2 u, Vec2 w);

struct LaxEval {
    double m[2][2];
    double trace() const { return m[0][0] + m[1][1]; }
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

/// L(lambda) of the bounce map's Lax pair; traceless, det generates the integrals.
LaxEval lax_L(const BilliardTable& table, const PhasePoint& s, double lambda);

/// M(lambda) of the Lax pair, evaluated at an outgoing boundary state with the
/// map's scalar mu.  Throws "singular map point" where the map normalization
/// vanishes (there M degenerates to the zero matrix).
LaxEval lax_M(const BilliardTable& table, const PhasePoint& s, double lambda);

/// p(lambda) = c2 lambda^2 + c1 lambda + c0 = (lambda-a)(lambda-b) det L(lambda);
/// its roots are the two caustic parameters.
struct CharPoly {
    double c2, c1, c0;
    double eval(double lambda) const { return (c2 * lambda + c1) * lambda + c0; }
    double discriminant() const { return c1 * c1 - 4.0 * c2 * c0; }
};

CharPoly char_poly(const BilliardTable& table, const PhasePoint& s);

/// Worst mismatch of char_poly against (l-a)(l-b) det L(l) over the probe set;
/// the identity check behind the coefficient formulas.
double char_poly_residual(const BilliardTable& table, const PhasePoint& s);

/// Probe parameters for Lax/char-poly cross checks, spread across the pole
/// structure of the pencil (and away from 0, where M is singular).
std::array<double, 5> probe_lambdas(const BilliardTable& table);

struct CausticPair {
    double lambda1, lambda2;  // sorted, lambda1 <= lambda2
    ConicClass class1, class2;
};

/// Sorted real roots of char_poly, classified.  A discriminant below -1e-12
/// throws "complex caustics"; negligible negatives clamp to the double root.
CausticPair caustics(const BilliardTable& table, const PhasePoint& s);

struct InvariantData {
    double E;
    double lambda2;
};

/// The momentum map (E, lambda2) on M_B, with lambda2 from the explicit
/// quadratic-root expression.  Throws on membership failure.
InvariantData momentum_map(const BilliardTable& table, const PhasePoint& s);

/// Membership in M_B: p(0) <= c0_slack and xi inside or on the table.
bool in_billiard_domain(const BilliardTable& table, const PhasePoint& s,
                        double c0_slack = 0.0);

/// Scale-aware slack for boundary states produced by the solvers, where p(0)
/// lands within rounding of zero.
double default_domain_slack(const BilliardTable& table);

}  // namespace hooke
