#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hooke/integrability.hpp"
#include "hooke/kernels.hpp"
#include "hooke/sampling.hpp"

using namespace hooke;
namespace kd = hooke::kernels::detail;

TEST_CASE("scan reference matches direct evaluation") {
    const kernels::ResidualSeries s{-0.3, 0.8, -0.45, 4.0 * M_PI / 1024};
    std::vector<double> out(1025);
    kd::boundary_residual_scan_scalar(s, out);
    for (int k : {0, 1, 17, 512, 1024}) {
        const double th = k * s.step;
        CHECK(out[k] == doctest::Approx(s.offset + s.c_cos * std::cos(th) +
                                        s.c_sin * std::sin(th))
                            .epsilon(1e-15));
    }
}

TEST_CASE("avx2 scan agrees with the scalar reference") {
    if (!kd::avx2_supported()) {
        MESSAGE("AVX2 not available, skipping equivalence check");
        return;
    }
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const kernels::ResidualSeries s{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                                        rng.uniform(-2.0, 2.0), 4.0 * M_PI / 1024};
        const double scale =
            std::abs(s.offset) + std::hypot(s.c_cos, s.c_sin) + 1.0;
        std::vector<double> ref(1025), simd(1025);
        kd::boundary_residual_scan_scalar(s, ref);
        kd::boundary_residual_scan_avx2(s, simd);
        double worst = 0.0;
        for (std::size_t k = 0; k < ref.size(); ++k) {
            worst = std::max(worst, std::abs(ref[k] - simd[k]));
        }
        CHECK(worst <= 1e-11 * scale);
    }
}

TEST_CASE("scalar invariant batch is bitwise-consistent with the scalar ops") {
    Rng rng(43);
    const BilliardTable table = random_table(rng);
    const std::size_t n = 257;
    std::vector<double> x(n), y(n), vx(n), vy(n), E(n), p0(n), l1(n), l2(n);
    for (std::size_t k = 0; k < n; ++k) {
        const PhasePoint s = random_domain_state(table, rng);
        x[k] = s.xi.x; y[k] = s.xi.y; vx[k] = s.v.x; vy[k] = s.v.y;
    }
    kd::state_invariants_scalar(table, {x, y, vx, vy, E, p0, l1, l2});
    for (std::size_t k = 0; k < n; ++k) {
        const PhasePoint s{{x[k], y[k]}, {vx[k], vy[k]}};
        const CharPoly p = char_poly(table, s);
        CHECK(E[k] == energy(table, s));
        CHECK(p0[k] == p.c0);
        const CausticPair cp = caustics(table, s);
        CHECK(l1[k] == cp.lambda1);
        CHECK(l2[k] == cp.lambda2);
    }
}

TEST_CASE("avx2 invariant batch agrees with the scalar reference") {
    if (!kd::avx2_supported()) {
        MESSAGE("AVX2 not available, skipping equivalence check");
        return;
    }
    Rng rng(44);
    for (int trial = 0; trial < 10; ++trial) {
        const BilliardTable table = random_table(rng);
        const std::size_t n = 1003;  // odd length exercises the tail
        std::vector<double> x(n), y(n), vx(n), vy(n);
        std::vector<double> E1(n), p1(n), a1(n), b1(n);
        std::vector<double> E2(n), p2(n), a2(n), b2(n);
        for (std::size_t k = 0; k < n; ++k) {
            const PhasePoint s = random_domain_state(table, rng);
            x[k] = s.xi.x; y[k] = s.xi.y; vx[k] = s.v.x; vy[k] = s.v.y;
        }
        kd::state_invariants_scalar(table, {x, y, vx, vy, E1, p1, a1, b1});
        kd::state_invariants_avx2(table, {x, y, vx, vy, E2, p2, a2, b2});
        for (std::size_t k = 0; k < n; ++k) {
            const double scale = std::max({1.0, std::abs(p1[k]), std::abs(b1[k])});
            CHECK(std::abs(E1[k] - E2[k]) <= 1e-13 * std::max(1.0, E1[k]));
            CHECK(std::abs(p1[k] - p2[k]) <= 1e-12 * scale);
            CHECK(std::abs(a1[k] - a2[k]) <= 1e-12 * scale);
            CHECK(std::abs(b1[k] - b2[k]) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("dispatch reports a usable lane") {
    const kernels::Isa isa = kernels::active_isa();
    MESSAGE("active kernel lane: ", kernels::to_string(isa));
    if (isa == kernels::Isa::avx2) CHECK(kd::avx2_supported());
    // The dispatched entry point must produce the active lane's output.
    const kernels::ResidualSeries s{0.1, 1.0, -0.5, 4.0 * M_PI / 64};
    std::vector<double> a(65), b(65);
    kernels::boundary_residual_scan(s, a);
    if (isa == kernels::Isa::avx2) {
        kd::boundary_residual_scan_avx2(s, b);
    } else {
        kd::boundary_residual_scan_scalar(s, b);
    }
    CHECK(a == b);
}
