#include "hooke/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hooke::kernels {

namespace {

Isa pick_isa() {
    if (const char* env = std::getenv("HBILLIARD_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0 && detail::avx2_supported()) return Isa::avx2;
        // "auto" or anything else falls through to detection
    }
    return detail::avx2_supported() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() {
    static const Isa isa = pick_isa();
    return isa;
}

const char* to_string(Isa isa) {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

void boundary_residual_scan(const ResidualSeries& s, std::span<double> out) {
    if (active_isa() == Isa::avx2) {
        detail::boundary_residual_scan_avx2(s, out);
    } else {
        detail::boundary_residual_scan_scalar(s, out);
    }
}

void state_invariants_batch(const BilliardTable& table, const InvariantBatch& io) {
    if (active_isa() == Isa::avx2) {
        detail::state_invariants_avx2(table, io);
    } else {
        detail::state_invariants_scalar(table, io);
    }
}

}  // namespace hooke::kernels
