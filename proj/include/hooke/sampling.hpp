#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hooke/dynamics.hpp"
#include "hooke/integrability.hpp"

namespace hooke {

/// Default seed for every randomized sweep; fixed for reproducibility.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// mt19937_64 with a hand-rolled u64 -> [0,1) conversion so streams are
/// identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

/// Desk-scale random table: a in [0.8, 5], b a fraction of a, sigma in [0.3, 3].
BilliardTable random_table(Rng& rng);

/// Rejection sample of M_B: xi uniform in the table, v uniform in a speed
/// ball, kept when p(0) <= -margin (margin = 0 accepts the closure).
PhasePoint random_domain_state(const BilliardTable& table, Rng& rng,
                               double p0_margin = 0.0);

/// Random outgoing boundary state in M_B (same rejection, xi on the wall).
PhasePoint random_boundary_state(const BilliardTable& table, Rng& rng,
                                 double p0_margin = 0.0);

/// States whose momentum-map images sit within ~delta of the three corner
/// points (sigma b/2, a), (sigma a/2, b), (sigma (a+b)/2, 0).
std::vector<PhasePoint> corner_probe_states(const BilliardTable& table, double delta);

}  // namespace hooke
