#include <immintrin.h>

#include "ccf/kernels.hpp"

namespace ccf::kernels {

// Four points per lane. The arithmetic mirrors classify_scalar exactly
// (same association order, no FMA), so verdicts match bit for bit.
void classify_avx2(const CompiledRegion& r, const double* xs, const double* ys, std::size_t n,
                   double eps, std::uint8_t* out) {
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d veps = _mm256_set1_pd(eps);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(xs + i);
        const __m256d y = _mm256_loadu_pd(ys + i);
        const __m256d r2 = _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y));
        __m256d in_acc = zero;
        __m256d near_acc = zero;
        for (const auto& [begin, end] : r.cells) {
            __m256d cell_in = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
            for (std::uint32_t k = begin; k < end; ++k) {
                const __m256d A = _mm256_set1_pd(r.A[k]);
                const __m256d Bx = _mm256_set1_pd(r.Bx[k]);
                const __m256d By = _mm256_set1_pd(r.By[k]);
                const __m256d C = _mm256_set1_pd(r.C[k]);
                const __m256d side = _mm256_set1_pd(r.side[k]);
                const __m256d lin =
                    _mm256_add_pd(_mm256_mul_pd(Bx, x), _mm256_mul_pd(By, y));
                const __m256d f =
                    _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(A, r2), _mm256_mul_pd(two, lin)), C);
                near_acc = _mm256_or_pd(
                    near_acc, _mm256_cmp_pd(_mm256_and_pd(f, absmask), veps, _CMP_LT_OQ));
                cell_in = _mm256_and_pd(
                    cell_in, _mm256_cmp_pd(_mm256_mul_pd(f, side), zero, _CMP_LE_OQ));
            }
            in_acc = _mm256_or_pd(in_acc, cell_in);
        }
        const int in_bits = _mm256_movemask_pd(in_acc);
        const int near_bits = _mm256_movemask_pd(near_acc);
        for (int lane = 0; lane < 4; ++lane) {
            out[i + lane] = (near_bits >> lane) & 1 ? 2 : ((in_bits >> lane) & 1 ? 1 : 0);
        }
    }
    if (i < n) classify_scalar(r, xs + i, ys + i, n - i, eps, out + i);
}

}  // namespace ccf::kernels
