// AVX2+FMA variants of the batch kernels.  Compiled with per-function target
// attributes so the translation unit builds under the project's baseline
// flags; nothing here runs unless the dispatcher saw cpuid support.

#include "hooke/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cmath>

namespace hooke::kernels::detail {

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

__attribute__((target("avx2,fma")))
void boundary_residual_scan_avx2(const ResidualSeries& s, std::span<double> out) {
    const std::size_t n = out.size();
    std::size_t k = 0;

    if (n >= 8) {
        // Four phase lanes advanced jointly by a rotation of 4*step; the trig
        // seeds are the only libm calls.  Rotation roundoff grows linearly in
        // the sample count and stays ~1e-13 at the scan lengths used here.
        const double cs = std::cos(s.step), sn = std::sin(s.step);
        const double c2 = cs * cs - sn * sn, s2 = 2.0 * sn * cs;
        const double c3 = c2 * cs - s2 * sn, s3 = s2 * cs + c2 * sn;
        const double c4 = c3 * cs - s3 * sn, s4 = s3 * cs + c3 * sn;

        __m256d vcos = _mm256_set_pd(c3, c2, cs, 1.0);
        __m256d vsin = _mm256_set_pd(s3, s2, sn, 0.0);
        const __m256d rc = _mm256_set1_pd(c4);
        const __m256d rs = _mm256_set1_pd(s4);
        const __m256d off = _mm256_set1_pd(s.offset);
        const __m256d ac = _mm256_set1_pd(s.c_cos);
        const __m256d as = _mm256_set1_pd(s.c_sin);

        for (; k + 4 <= n; k += 4) {
            __m256d f = _mm256_fmadd_pd(ac, vcos, _mm256_fmadd_pd(as, vsin, off));
            _mm256_storeu_pd(out.data() + k, f);
            __m256d nc = _mm256_fmsub_pd(vcos, rc, _mm256_mul_pd(vsin, rs));
            __m256d ns = _mm256_fmadd_pd(vsin, rc, _mm256_mul_pd(vcos, rs));
            vcos = nc;
            vsin = ns;
        }
    }
    for (; k < n; ++k) {
        const double th = static_cast<double>(k) * s.step;
        out[k] = s.offset + s.c_cos * std::cos(th) + s.c_sin * std::sin(th);
    }
}

__attribute__((target("avx2,fma")))
void state_invariants_avx2(const BilliardTable& table, const InvariantBatch& io) {
    const std::size_t n = io.x.size();
    const double a = table.a(), b = table.b(), sigma = table.sigma();

    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    const __m256d vs = _mm256_set1_pd(sigma);
    const __m256d vab_sigma = _mm256_set1_pd(a * b * sigma);
    const __m256d vapb_sigma = _mm256_set1_pd(sigma * (a + b));
    const __m256d vhalf = _mm256_set1_pd(0.5);
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d sign_mask = _mm256_set1_pd(-0.0);

    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d x = _mm256_loadu_pd(io.x.data() + k);
        const __m256d y = _mm256_loadu_pd(io.y.data() + k);
        const __m256d vx = _mm256_loadu_pd(io.vx.data() + k);
        const __m256d vy = _mm256_loadu_pd(io.vy.data() + k);

        const __m256d L = _mm256_fmsub_pd(vy, x, _mm256_mul_pd(vx, y));
        const __m256d v2 = _mm256_fmadd_pd(vx, vx, _mm256_mul_pd(vy, vy));
        const __m256d r2 = _mm256_fmadd_pd(x, x, _mm256_mul_pd(y, y));
        const __m256d E = _mm256_mul_pd(vhalf, _mm256_fmadd_pd(vs, r2, v2));

        // p0 = L^2 - (b vx^2 + a vy^2) - sigma (b x^2 + a y^2) + a b sigma
        __m256d t1 = _mm256_fmadd_pd(_mm256_mul_pd(vb, vx), vx,
                                     _mm256_mul_pd(_mm256_mul_pd(va, vy), vy));
        __m256d t2 = _mm256_fmadd_pd(_mm256_mul_pd(vb, x), x,
                                     _mm256_mul_pd(_mm256_mul_pd(va, y), y));
        __m256d p0 = _mm256_fmsub_pd(L, L, t1);
        p0 = _mm256_fnmadd_pd(vs, t2, p0);
        p0 = _mm256_add_pd(p0, vab_sigma);

        const __m256d c1 = _mm256_fmsub_pd(_mm256_set1_pd(2.0), E, vapb_sigma);

        // Sign-matched quadratic roots, mirroring solve_caustic_roots.
        __m256d disc = _mm256_fmsub_pd(c1, c1,
                                       _mm256_mul_pd(_mm256_set1_pd(4.0 * sigma), p0));
        disc = _mm256_max_pd(disc, vzero);
        const __m256d sq = _mm256_sqrt_pd(disc);
        const __m256d sq_signed =
            _mm256_or_pd(_mm256_andnot_pd(sign_mask, sq), _mm256_and_pd(sign_mask, c1));
        const __m256d q = _mm256_mul_pd(_mm256_set1_pd(-0.5),
                                        _mm256_add_pd(c1, sq_signed));
        const __m256d r1 = _mm256_div_pd(q, vs);
        const __m256d r2q = _mm256_div_pd(p0, q);
        const __m256d q_zero = _mm256_cmp_pd(q, vzero, _CMP_EQ_OQ);
        const __m256d dbl =
            _mm256_div_pd(_mm256_xor_pd(c1, sign_mask), _mm256_add_pd(vs, vs));
        const __m256d ra = _mm256_blendv_pd(r1, dbl, q_zero);
        const __m256d rb = _mm256_blendv_pd(r2q, dbl, q_zero);

        _mm256_storeu_pd(io.energy.data() + k, E);
        _mm256_storeu_pd(io.p0.data() + k, p0);
        _mm256_storeu_pd(io.lambda1.data() + k, _mm256_min_pd(ra, rb));
        _mm256_storeu_pd(io.lambda2.data() + k, _mm256_max_pd(ra, rb));
    }

    if (k < n) {
        InvariantBatch tail{io.x.subspan(k), io.y.subspan(k),
                            io.vx.subspan(k), io.vy.subspan(k),
                            io.energy.subspan(k), io.p0.subspan(k),
                            io.lambda1.subspan(k), io.lambda2.subspan(k)};
        state_invariants_scalar(table, tail);
    }
}

}  // namespace hooke::kernels::detail

#else  // non-x86 fallback stubs; never selected by the dispatcher

namespace hooke::kernels::detail {
bool avx2_supported() { return false; }
void boundary_residual_scan_avx2(const ResidualSeries& s, std::span<double> out) {
    boundary_residual_scan_scalar(s, out);
}
void state_invariants_avx2(const BilliardTable& table, const InvariantBatch& io) {
    state_invariants_scalar(table, io);
}
}  // namespace hooke::kernels::detail

#endif
