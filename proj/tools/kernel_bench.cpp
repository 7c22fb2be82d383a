// Micro-benchmark for the dispatched kernels: scalar reference vs AVX2 lane.

#include <chrono>
#include <cstdio>
#include <vector>

#include "hooke/kernels.hpp"
#include "hooke/sampling.hpp"

namespace {

using Clock = std::chrono::steady_clock;
namespace kd = hooke::kernels::detail;

template <typename F>
double time_per_item(F&& body, std::size_t items, int reps) {
    body();  // warm up
    const auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) body();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    return s / reps / static_cast<double>(items) * 1e9;
}

}  // namespace

int main() {
    const hooke::BilliardTable table{2.0, 1.0, 1.0};
    hooke::Rng rng(hooke::kDefaultSeed);

    std::printf("active lane: %s\n", hooke::kernels::to_string(hooke::kernels::active_isa()));

    {
        const std::size_t n = 1025;
        std::vector<double> out(n);
        const hooke::kernels::ResidualSeries s{-0.2, 0.9, -0.4, 4.0 * M_PI / (n - 1)};
        const int reps = 20000;
        const double scalar_ns =
            time_per_item([&] { kd::boundary_residual_scan_scalar(s, out); }, n, reps);
        std::printf("residual scan  scalar: %7.2f ns/sample\n", scalar_ns);
        if (kd::avx2_supported()) {
            const double avx_ns =
                time_per_item([&] { kd::boundary_residual_scan_avx2(s, out); }, n, reps);
            std::printf("residual scan  avx2:   %7.2f ns/sample  (%.1fx)\n", avx_ns,
                        scalar_ns / avx_ns);
        }
    }

    {
        const std::size_t n = 100000;
        std::vector<double> x(n), y(n), vx(n), vy(n), E(n), p0(n), l1(n), l2(n);
        for (std::size_t k = 0; k < n; ++k) {
            const hooke::PhasePoint st = hooke::random_domain_state(table, rng);
            x[k] = st.xi.x; y[k] = st.xi.y; vx[k] = st.v.x; vy[k] = st.v.y;
        }
        const hooke::kernels::InvariantBatch io{x, y, vx, vy, E, p0, l1, l2};
        const int reps = 50;
        const double scalar_ns =
            time_per_item([&] { kd::state_invariants_scalar(table, io); }, n, reps);
        std::printf("invariants     scalar: %7.2f ns/state\n", scalar_ns);
        if (kd::avx2_supported()) {
            const double avx_ns =
                time_per_item([&] { kd::state_invariants_avx2(table, io); }, n, reps);
            std::printf("invariants     avx2:   %7.2f ns/state   (%.1fx)\n", avx_ns,
                        scalar_ns / avx_ns);
        }
    }
    return 0;
}
