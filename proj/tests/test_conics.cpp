#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hooke/conics.hpp"

using namespace hooke;

namespace {
const BilliardTable kTable{2.0, 1.0, 1.0};
}

TEST_CASE("table validation and derived quantities") {
    CHECK_THROWS_AS(BilliardTable(1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BilliardTable(1.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BilliardTable(2.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(BilliardTable(2.0, -1.0, 1.0), std::invalid_argument);

    CHECK(kTable.omega() == doctest::Approx(1.0));
    CHECK(kTable.focal_param() == doctest::Approx(1.0));

    auto [fp, fm] = kTable.foci();
    CHECK(fp.x == doctest::Approx(1.0));
    CHECK(fm.x == doctest::Approx(-1.0));
    CHECK(fp.y == 0.0);

    auto [gp, gm] = BilliardTable(5.0, 1.0, 1.0).foci();
    CHECK(gp.x == doctest::Approx(2.0));
    CHECK(gm.x == doctest::Approx(-2.0));

    const double eps = 1e-6;
    auto [hp, hm] = BilliardTable(1.0 + eps, 1.0, 1.0).foci();
    CHECK(hp.x == doctest::Approx(std::sqrt(eps)));
    CHECK(hm.x == doctest::Approx(-std::sqrt(eps)));

    CHECK(kTable.on_boundary({std::sqrt(2.0), 0.0}));
    CHECK(kTable.on_boundary({0.0, 1.0}));
    CHECK(kTable.contains({0.3, -0.4}));
    CHECK(!kTable.contains({1.4, 0.9}));
}

TEST_CASE("conic classification intervals and snapping") {
    CHECK(classify_conic(kTable, 1.0) == ConicClass::DegenerateFocal);
    CHECK(classify_conic(kTable, 0.0) == ConicClass::BoundaryEllipse);
    CHECK(classify_conic(kTable, 1.5) == ConicClass::Hyperbola);
    CHECK(classify_conic(kTable, -0.5) == ConicClass::OuterEllipse);
    CHECK(classify_conic(kTable, 0.5) == ConicClass::InnerEllipse);
    CHECK(classify_conic(kTable, 2.0) == ConicClass::DegenerateMinorAxis);

    // Snapping within the default tolerance, both sides.
    CHECK(classify_conic(kTable, 1e-10) == ConicClass::BoundaryEllipse);
    CHECK(classify_conic(kTable, -1e-10) == ConicClass::BoundaryEllipse);
    CHECK(classify_conic(kTable, 1.0 + 5e-10) == ConicClass::DegenerateFocal);
    CHECK(classify_conic(kTable, 2.0 - 5e-10) == ConicClass::DegenerateMinorAxis);
    CHECK(classify_conic(kTable, 2.0 + 5e-10) == ConicClass::DegenerateMinorAxis);

    CHECK_THROWS_WITH_AS(classify_conic(kTable, 2.1), "not a caustic parameter",
                         std::domain_error);
    CHECK_THROWS_AS(classify_conic(kTable, 1.0, -1e-3), std::invalid_argument);

    // Constant on each open interval.
    std::mt19937_64 gen(7);
    auto u = [&](double lo, double hi) {
        return lo + (hi - lo) * (gen() >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < 200; ++i) {
        CHECK(classify_conic(kTable, u(1e-6, 1.0 - 1e-6)) == ConicClass::InnerEllipse);
        CHECK(classify_conic(kTable, u(1.0 + 1e-6, 2.0 - 1e-6)) == ConicClass::Hyperbola);
        CHECK(classify_conic(kTable, u(-10.0, -1e-6)) == ConicClass::OuterEllipse);
    }
}

TEST_CASE("conic quadric values") {
    CHECK(conic_value(kTable, 0.0, {std::sqrt(2.0), 0.0}) == doctest::Approx(0.0));
    CHECK(conic_value(kTable, 0.0, {0.0, 0.0}) == doctest::Approx(-1.0));
    CHECK(conic_value(kTable, -1.0, {0.0, 0.0}) == doctest::Approx(-1.0));
    CHECK_THROWS_WITH_AS(conic_value(kTable, 1.0, {0.0, 0.0}),
                         "degenerate conic has no quadric form", std::domain_error);
    CHECK_THROWS_AS(conic_value(kTable, 2.0, {0.0, 0.0}), std::domain_error);

    // Negative strictly inside an ellipse member, by sampling.
    std::mt19937_64 gen(11);
    auto u = [&](double lo, double hi) {
        return lo + (hi - lo) * (gen() >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < 500; ++i) {
        const double l = u(-2.0, 0.9);
        if (std::abs(l) < 1e-6) continue;
        const double rx = std::sqrt(2.0 - l), ry = std::sqrt(1.0 - l);
        const double r = u(0.0, 0.999), th = u(0.0, 2.0 * M_PI);
        const Vec2 p{rx * r * std::cos(th), ry * r * std::sin(th)};
        CHECK(conic_value(kTable, l, p) < 0.0);
    }
}

TEST_CASE("flow ellipse implicit form") {
    std::mt19937_64 gen(13);
    auto u = [&](double lo, double hi) {
        return lo + (hi - lo) * (gen() >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < 100; ++i) {
        const Vec2 xi{u(-1.5, 1.5), u(-1.0, 1.0)};
        const Vec2 v{u(-2.0, 2.0), u(-2.0, 2.0)};
        const FlowEllipse fe = FlowEllipse::from_state(xi, v, 1.3);
        for (int k = 0; k < 32; ++k) {
            CHECK(fe.membership_residual(fe.point(u(0.0, 2.0 * M_PI))) <= 1e-12);
        }
    }
    // Collinear generators: the form degenerates to the carrying line.
    const FlowEllipse seg = FlowEllipse::from_state({1.0, 0.5}, {2.0, 1.0}, 1.0);
    CHECK(seg.rhs == 0.0);
    CHECK(seg.membership_residual({3.0, 1.5}) <= 1e-12);
}

TEST_CASE("tangency defect oracle") {
    // Unit circle through the foci of the default table.
    const FlowEllipse circle = FlowEllipse::from_state({1.0, 0.0}, {0.0, 1.0}, 1.0);
    CHECK(tangency_defect(kTable, 1.0, circle) <= 1e-9);

    // The boundary itself against lambda = 0: identical conics are tangent.
    const FlowEllipse wall =
        FlowEllipse::from_state({std::sqrt(2.0), 0.0}, {0.0, 1.0}, 1.0);
    CHECK(tangency_defect(kTable, 0.0, wall) <= 1e-9);

    // Unit circle against the boundary: interior except at (0, +-1).
    CHECK(tangency_defect(kTable, 0.0, circle) <= 1e-6);

    // Clearly separated: a small circle well inside the table.
    const FlowEllipse small = FlowEllipse::from_state({0.5, 0.0}, {0.0, 0.5}, 1.0);
    CHECK(tangency_defect(kTable, 0.0, small) > 0.1);

    // Transversal crossing: circle of radius 1.2 cuts the boundary.
    const FlowEllipse crossing = FlowEllipse::from_state({1.2, 0.0}, {0.0, 1.2}, 1.0);
    CHECK(tangency_defect(kTable, 0.0, crossing) > 0.01);

    // Degenerate lambda = a: minimal |x|, which every origin-centred flow
    // conic attains at ~0 where it crosses the y-axis.
    CHECK(tangency_defect(kTable, 2.0, small) <= 1e-9);
    const FlowEllipse off = FlowEllipse::from_state({0.9, 0.1}, {-0.1, 0.4}, 1.0);
    CHECK(tangency_defect(kTable, 2.0, off) <= 1e-9);

    // Degenerate lambda = b against an ellipse missing the foci.
    CHECK(tangency_defect(kTable, 1.0, small) == doctest::Approx(0.5).epsilon(1e-6));
}
