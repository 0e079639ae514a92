#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "difs/kernels.hpp"

// Compiled with -mavx2 -mfma; callers must gate on runtime CPU support.

namespace difs::kernels::avx2 {

void axpy(float a, const float* x, float* y, std::size_t n) {
    const __m256 va = _mm256_set1_ps(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 xv = _mm256_loadu_ps(x + i);
        __m256 yv = _mm256_loadu_ps(y + i);
        _mm256_storeu_ps(y + i, _mm256_fmadd_ps(va, xv, yv));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void axpy_stride2(float a, const float* x, float* y, std::size_t n) {
    const __m256 va = _mm256_set1_ps(a);
    const __m256i pick = _mm256_setr_epi32(0, 1, 4, 5, 2, 3, 6, 7);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 lo = _mm256_loadu_ps(x + 2 * i);
        __m256 hi = _mm256_loadu_ps(x + 2 * i + 8);
        // even-indexed elements of the 16-float window
        __m256 evens = _mm256_shuffle_ps(lo, hi, _MM_SHUFFLE(2, 0, 2, 0));
        evens = _mm256_permutevar8x32_ps(evens, pick);
        __m256 yv = _mm256_loadu_ps(y + i);
        _mm256_storeu_ps(y + i, _mm256_fmadd_ps(va, evens, yv));
    }
    for (; i < n; ++i) y[i] += a * x[2 * i];
}

void leaky_relu(float* x, std::size_t n, float slope) {
    const __m256 vs = _mm256_set1_ps(slope);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 v = _mm256_loadu_ps(x + i);
        _mm256_storeu_ps(x + i, _mm256_max_ps(v, _mm256_mul_ps(v, vs)));
    }
    for (; i < n; ++i) x[i] = x[i] > 0.0f ? x[i] : slope * x[i];
}

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double sum_abs_diff(const float* a, const float* b, std::size_t n) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 af = _mm256_loadu_ps(a + i);
        __m256 bf = _mm256_loadu_ps(b + i);
        __m256d d0 = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(af)),
                                   _mm256_cvtps_pd(_mm256_castps256_ps128(bf)));
        __m256d d1 = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(af, 1)),
                                   _mm256_cvtps_pd(_mm256_extractf128_ps(bf, 1)));
        acc0 = _mm256_add_pd(acc0, _mm256_andnot_pd(sign, d0));
        acc1 = _mm256_add_pd(acc1, _mm256_andnot_pd(sign, d1));
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        double d = static_cast<double>(a[i]) - b[i];
        acc += d < 0.0 ? -d : d;
    }
    return acc;
}

double sum_sq_diff(const float* a, const float* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 af = _mm256_loadu_ps(a + i);
        __m256 bf = _mm256_loadu_ps(b + i);
        __m256d d0 = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(af)),
                                   _mm256_cvtps_pd(_mm256_castps256_ps128(bf)));
        __m256d d1 = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(af, 1)),
                                   _mm256_cvtps_pd(_mm256_extractf128_ps(bf, 1)));
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(d0, d0));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(d1, d1));
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        double d = static_cast<double>(a[i]) - b[i];
        acc += d * d;
    }
    return acc;
}

void integral_plane(const float* src, std::size_t h, std::size_t w, double* out) {
    const std::size_t ow = w + 1;
    for (std::size_t x = 0; x < ow; ++x) out[x] = 0.0;
    const __m256d zero = _mm256_setzero_pd();
    for (std::size_t y = 0; y < h; ++y) {
        const float* src_row = src + y * w;
        const double* prev = out + y * ow;
        double* row = out + (y + 1) * ow;
        row[0] = 0.0;
        double carry = 0.0;
        std::size_t x = 0;
        for (; x + 4 <= w; x += 4) {
            __m256d v = _mm256_cvtps_pd(_mm_loadu_ps(src_row + x));
            // in-register inclusive scan: v += (v << 1 lane), v += (v << 2 lanes)
            __m256d s1 = _mm256_blend_pd(zero, _mm256_permute4x64_pd(v, 0x90), 0x0E);
            v = _mm256_add_pd(v, s1);
            __m256d s2 = _mm256_blend_pd(zero, _mm256_permute4x64_pd(v, 0x40), 0x0C);
            v = _mm256_add_pd(v, s2);
            __m128d hi = _mm256_extractf128_pd(v, 1);
            double block = _mm_cvtsd_f64(_mm_unpackhi_pd(hi, hi));
            __m256d tot = _mm256_add_pd(v, _mm256_set1_pd(carry));
            __m256d p = _mm256_loadu_pd(prev + x + 1);
            _mm256_storeu_pd(row + x + 1, _mm256_add_pd(tot, p));
            carry += block;
        }
        for (; x < w; ++x) {
            carry += src_row[x];
            row[x + 1] = prev[x + 1] + carry;
        }
    }
}

void corner_sums(const double* it, std::size_t channels, std::size_t stride,
                 std::size_t a, std::size_t b, std::size_t d, std::size_t e, float* out) {
    const long long s = static_cast<long long>(stride);
    const __m256i vidx = _mm256_set_epi64x(3 * s, 2 * s, s, 0);
    std::size_t c = 0;
    for (; c + 4 <= channels; c += 4) {
        const double* base = it + c * stride;
        __m256d va = _mm256_i64gather_pd(base + a, vidx, 8);
        __m256d vb = _mm256_i64gather_pd(base + b, vidx, 8);
        __m256d vd = _mm256_i64gather_pd(base + d, vidx, 8);
        __m256d ve = _mm256_i64gather_pd(base + e, vidx, 8);
        __m256d sum = _mm256_add_pd(_mm256_sub_pd(_mm256_sub_pd(va, vb), vd), ve);
        _mm_storeu_ps(out + c, _mm256_cvtpd_ps(sum));
    }
    for (; c < channels; ++c) {
        const double* p = it + c * stride;
        out[c] = static_cast<float>(p[a] - p[b] - p[d] + p[e]);
    }
}

}  // namespace difs::kernels::avx2

#endif  // x86_64
