#pragma once

#include <cmath>
#include <utility>

namespace hooke {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 u, Vec2 v) { return {u.x + v.x, u.y + v.y}; }
inline Vec2 operator-(Vec2 u, Vec2 v) { return {u.x - v.x, u.y - v.y}; }
inline Vec2 operator-(Vec2 u) { return {-u.x, -u.y}; }
inline Vec2 operator*(double s, Vec2 u) { return {s * u.x, s * u.y}; }
inline Vec2 operator*(Vec2 u, double s) { return s * u; }
inline Vec2 operator/(Vec2 u, double s) { return {u.x / s, u.y / s}; }

inline double dot(Vec2 u, Vec2 v) { return u.x * v.x + u.y * v.y; }
inline double cross(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }
inline double norm2(Vec2 u) { return dot(u, u); }
inline double norm(Vec2 u) { return std::hypot(u.x, u.y); }
inline double dist(Vec2 u, Vec2 v) { return norm(u - v); }

namespace tol {
// Snap distance for the distinguished confocal parameters {0, b, a}.
inline constexpr double lambda_snap = 1e-9;
// Snap distance in energy for band boundaries.
inline constexpr double energy_snap = 1e-9;
// |x^2/a + y^2/b - 1| accepted as "on the boundary".
inline constexpr double boundary = 1e-9;
// Target residual for the boundary-hit root polish.
inline constexpr double hit_residual = 1e-12;
}  // namespace tol

/// Elliptic table x^2/a + y^2/b = 1 with an attractive Hooke center of
/// strength sigma at the origin.  a and b are the squared semi-axes.
class BilliardTable {
public:
    BilliardTable(double a, double b, double sigma);

    double a() const { return a_; }
    double b() const { return b_; }
    double sigma() const { return sigma_; }
    double omega() const { return omega_; }

    /// c^2 = a - b, the squared focal half-distance.
    double focal_param() const { return a_ - b_; }
    double focal_half_distance() const { return std::sqrt(a_ - b_); }
    std::pair<Vec2, Vec2> foci() const;

    /// A = diag(1/a, 1/b) applied to a vector.
    Vec2 applyA(Vec2 u) const { return {u.x / a_, u.y / b_}; }
    /// (u, A v)
    double formA(Vec2 u, Vec2 v) const { return u.x * v.x / a_ + u.y * v.y / b_; }

    /// x^2/a + y^2/b - 1; zero on the boundary, negative inside.
    double boundary_form(Vec2 p) const { return formA(p, p) - 1.0; }
    bool contains(Vec2 p, double eps = tol::boundary) const { return boundary_form(p) <= eps; }
    bool on_boundary(Vec2 p, double eps = tol::boundary) const {
        return std::abs(boundary_form(p)) <= eps;
    }

    /// Boundary point at parameter angle s: (sqrt(a) cos s, sqrt(b) sin s).
    Vec2 boundary_point(double s) const {
        return {std::sqrt(a_) * std::cos(s), std::sqrt(b_) * std::sin(s)};
    }
    /// Unit tangent of the boundary at parameter angle s, counterclockwise.
    Vec2 boundary_tangent(double s) const;

private:
    double a_;
    double b_;
    double sigma_;
    double omega_;
};

/// Classes of the confocal family C_lambda: x^2/(a-l) + y^2/(b-l) = 1.
enum class ConicClass {
    OuterEllipse,        // l < 0, contains the table
    BoundaryEllipse,     // l = 0, the table itself
    InnerEllipse,        // 0 < l < b
    DegenerateFocal,     // l = b, the focal pair
    Hyperbola,           // b < l < a
    DegenerateMinorAxis  // l = a, the y-axis
};

const char* to_string(ConicClass c);

/// Interval classification of lambda with snapping to {0, b, a} within tol.
/// Throws "not a caustic parameter" for lambda > a + tol.
ConicClass classify_conic(const BilliardTable& table, double lambda,
                          double tol = tol::lambda_snap);

/// x^2/(a-l) + y^2/(b-l) - 1.  Throws for the degenerate members l in {a, b}.
double conic_value(const BilliardTable& table, double lambda, Vec2 p);

/// Origin-centred ellipse spanned by two generators: points g1 cos(t) + g2 sin(t).
/// Also carried as an implicit quadratic cxx x^2 + 2 cxy xy + cyy y^2 = rhs,
/// which stays meaningful (rank one) when the generators are collinear and the
/// ellipse collapses to a segment through the origin.
struct FlowEllipse {
    Vec2 g1, g2;
    double cxx = 0, cxy = 0, cyy = 0, rhs = 0;

    static FlowEllipse from_state(Vec2 xi, Vec2 v, double omega);

    Vec2 point(double theta) const {
        return std::cos(theta) * g1 + std::sin(theta) * g2;
    }
    /// Scaled residual of the implicit form at p; ~0 iff p lies on the ellipse.
    double membership_residual(Vec2 p) const;
};

/// How far the flow ellipse is from being tangent to C_lambda.
/// 0 (within tolerance) iff tangent; penetration depth if they cross;
/// clearance of |conic_value| if they are disjoint.  Degenerate lambda:
/// for l = b the distance to the nearer focus, for l = a the minimal |x|.
/// Sampling oracle (4096 points + golden-section refinement), not fast.
double tangency_defect(const BilliardTable& table, double lambda, const FlowEllipse& fe);

}  // namespace hooke
