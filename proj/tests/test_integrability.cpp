#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hooke/integrability.hpp"
#include "hooke/sampling.hpp"

using namespace hooke;

namespace {
const BilliardTable kTable{2.0, 1.0, 1.0};
const double kRt2 = std::sqrt(2.0);

LaxEval mat_mul(const LaxEval& A, const LaxEval& B) {
    LaxEval C;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            C.m[i][j] = A.m[i][0] * B.m[0][j] + A.m[i][1] * B.m[1][j];
        }
    }
    return C;
}

LaxEval mat_inv(const LaxEval& A) {
    const double d = A.det();
    return {{{A.m[1][1] / d, -A.m[0][1] / d}, {-A.m[1][0] / d, A.m[0][0] / d}}};
}
}  // namespace

TEST_CASE("confocal pencil form") {
    CHECK(confocal_form(kTable, 0.0, {1.0, 1.0}, {1.0, 1.0}) ==
          doctest::Approx(1.5).epsilon(1e-15));
    CHECK(confocal_form(kTable, 0.7, {0.0, 0.0}, {3.0, -2.0}) == 0.0);

    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const Vec2 u{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const Vec2 w{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const double l = rng.uniform(-3.0, 0.9);
        CHECK(confocal_form(kTable, l, u, w) == confocal_form(kTable, l, w, u));
    }
    CHECK_THROWS_WITH_AS(confocal_form(kTable, 1.0, {1.0, 0.0}, {1.0, 0.0}),
                         "pole of q", std::domain_error);
    CHECK_THROWS_AS(confocal_form(kTable, 2.0, {1.0, 0.0}, {1.0, 0.0}),
                    std::domain_error);
}

TEST_CASE("Lax matrix L") {
    // Tangential state at the minor vertex, evaluated at lambda = 0.
    const LaxEval L = lax_L(kTable, {{0.0, 1.0}, {1.0, 0.0}}, 0.0);
    CHECK(L.m[0][0] == doctest::Approx(0.0));
    CHECK(L.m[0][1] == doctest::Approx(-0.5));
    CHECK(L.m[1][0] == doctest::Approx(0.0));
    CHECK(L.m[1][1] == doctest::Approx(0.0));
    CHECK(L.det() == doctest::Approx(0.0));

    // Zero state: [[0, -sigma], [1, 0]] regardless of lambda.
    const LaxEval Z = lax_L(kTable, {{0.0, 0.0}, {0.0, 0.0}}, 0.3);
    CHECK(Z.m[0][0] == 0.0);
    CHECK(Z.m[0][1] == doctest::Approx(-1.0));
    CHECK(Z.m[1][0] == doctest::Approx(1.0));
    CHECK(Z.det() == doctest::Approx(1.0));

    Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        const PhasePoint s = random_domain_state(kTable, rng);
        const double l = rng.uniform(-2.0, 0.9);
        CHECK(lax_L(kTable, s, l).trace() == 0.0);
    }
}

TEST_CASE("Lax conjugation is isospectral across the bounce map") {
    Rng rng(23);
    const auto probes = probe_lambdas(kTable);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const PhasePoint s = random_boundary_state(kTable, rng);
        const PhasePoint next = closed_form_map(kTable, s);
        for (double l : probes) {
            const double d0 = lax_L(kTable, s, l).det();
            const double d1 = lax_L(kTable, next, l).det();
            worst = std::max(worst, std::abs(d1 - d0));
            CHECK(lax_L(kTable, next, l).trace() == 0.0);
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("Lax transfer matrix M") {
    // det M = (lambda nu)^2, so M conjugates L away from lambda = 0.
    Rng rng(24);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const PhasePoint s = random_boundary_state(kTable, rng);
        const PhasePoint next = closed_form_map(kTable, s);
        for (double l : {-1.0, 0.4, 1.7}) {
            const LaxEval M = lax_M(kTable, s, l);
            const LaxEval conj = mat_mul(mat_mul(M, lax_L(kTable, s, l)), mat_inv(M));
            const LaxEval Lt = lax_L(kTable, next, l);
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) {
                    worst = std::max(worst, std::abs(conj.m[r][c] - Lt.m[r][c]));
                }
            }
        }
    }
    // The conjugation identity holds entrywise for the canonical branch: every
    // entry of L is bilinear in (xi, v), hence invariant under the overall
    // sign symmetry.
    CHECK(worst <= 1e-9);

    // nu = 0 degeneracy: M would be the zero matrix; flagged as singular.
    CHECK_THROWS_WITH_AS(lax_M(kTable, {{0.0, 1.0}, {kRt2, 0.0}}, 0.5),
                         "singular map point", std::domain_error);
}

TEST_CASE("characteristic polynomial coefficients") {
    const CharPoly p1 = char_poly(kTable, {{0.0, 1.0}, {1.0, 0.0}});
    CHECK(p1.c2 == 1.0);
    CHECK(p1.c1 == doctest::Approx(-1.0));
    CHECK(p1.c0 == doctest::Approx(0.0));

    const CharPoly p2 = char_poly(kTable, {{0.0, 0.0}, {0.0, kRt2}});
    CHECK(p2.c0 == doctest::Approx(-2.0));
    const CausticPair r2 = caustics(kTable, {{0.0, 0.0}, {0.0, kRt2}});
    CHECK(r2.lambda1 == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(r2.lambda2 == doctest::Approx(2.0).epsilon(1e-14));

    const CausticPair r3 = caustics(kTable, {{0.0, 0.0}, {0.0, 1.0}});
    CHECK(r3.lambda1 == doctest::Approx(0.0));
    CHECK(r3.lambda2 == doctest::Approx(2.0));

    // Identity with (l-a)(l-b) det L(l) at the probe values.
    Rng rng(25);
    for (int i = 0; i < 200; ++i) {
        const BilliardTable t = i < 100 ? kTable : random_table(rng);
        CHECK(char_poly_residual(t, random_domain_state(t, rng)) <= 1e-10);
    }

    // lambda = b is a root for every state on the major axis.
    for (int i = 0; i < 100; ++i) {
        const PhasePoint s{{rng.uniform(-1.4, 1.4), 0.0}, {rng.uniform(-3.0, 3.0), 0.0}};
        const CharPoly p = char_poly(kTable, s);
        CHECK(std::abs(p.eval(kTable.b())) <= 1e-12 * std::max(1.0, std::abs(p.c0)));
    }
}

TEST_CASE("caustic pair classification") {
    const CausticPair cx = caustics(kTable, {{0.0, 0.0}, {kRt2, 0.0}});
    CHECK(cx.lambda1 == doctest::Approx(0.0));
    CHECK(cx.lambda2 == doctest::Approx(1.0));
    CHECK(cx.class1 == ConicClass::BoundaryEllipse);
    CHECK(cx.class2 == ConicClass::DegenerateFocal);

    // Clamp of a barely-negative discriminant to the double root.
    // (For real states the discriminant is a sum of nonnegative terms inside
    // M_B, so only the clamp branch is reachable there.)
    const CausticPair dbl = caustics(kTable, {{0.0, 0.0}, {std::sqrt(3.0) / kRt2, std::sqrt(3.0) / kRt2}});
    CHECK(dbl.lambda1 <= dbl.lambda2);
}

TEST_CASE("momentum map") {
    const InvariantData m1 = momentum_map(kTable, {{0.0, 1.0}, {1.0, 0.0}});
    CHECK(m1.E == doctest::Approx(1.0));
    CHECK(m1.lambda2 == doctest::Approx(1.0));

    const InvariantData m2 = momentum_map(kTable, {{0.0, 0.0}, {0.0, kRt2}});
    CHECK(m2.E == doctest::Approx(1.0));
    CHECK(m2.lambda2 == doctest::Approx(2.0));

    const InvariantData m3 = momentum_map(kTable, {{0.0, 0.0}, {0.0, 1.0}});
    CHECK(m3.E == doctest::Approx(0.5));
    CHECK(m3.lambda2 == doctest::Approx(2.0));

    CHECK_THROWS_WITH_AS(momentum_map(kTable, {{0.0, 0.0}, {1.0, 0.0}}),
                         "state not in billiard domain", std::domain_error);

    // Agrees with the sorted quadratic roots.
    Rng rng(26);
    for (int i = 0; i < 500; ++i) {
        const BilliardTable t = random_table(rng);
        const PhasePoint s = random_domain_state(t, rng);
        const double viaroots = caustics(t, s).lambda2;
        CHECK(std::abs(momentum_map(t, s).lambda2 - viaroots) <=
              1e-12 * std::max(1.0, std::abs(viaroots)));
    }
}

TEST_CASE("billiard domain membership") {
    CHECK(!in_billiard_domain(kTable, {{0.0, 0.0}, {1.0, 0.0}}));
    CHECK(in_billiard_domain(kTable, {{0.0, 0.0}, {2.0, 0.0}}));
    CHECK(in_billiard_domain(kTable, {{0.0, 1.0}, {1.0, 0.0}}));  // p(0) = 0
    // Position outside the table fails membership even with p(0) <= 0.
    CHECK(!in_billiard_domain(kTable, {{2.0, 0.0}, {0.0, 0.0}}));

    // Sum rule on random states, one random table (full scale in acceptance).
    Rng rng(27);
    const BilliardTable t = random_table(rng);
    const double target = t.a() + t.b();
    for (int i = 0; i < 1000; ++i) {
        const PhasePoint s = random_domain_state(t, rng);
        const CausticPair cp = caustics(t, s);
        const double rhs = target - 2.0 * energy(t, s) / t.sigma();
        CHECK(std::abs(cp.lambda1 + cp.lambda2 - rhs) <=
              1e-12 * std::max(1.0, std::abs(target)));
        CHECK(cp.lambda1 <= 1e-12);
    }
}
