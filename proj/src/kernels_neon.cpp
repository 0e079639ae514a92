#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

#include "difs/kernels.hpp"

namespace difs::kernels::neon {

void axpy(float a, const float* x, float* y, std::size_t n) {
    const float32x4_t va = vdupq_n_f32(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t yv = vld1q_f32(y + i);
        vst1q_f32(y + i, vfmaq_f32(yv, vld1q_f32(x + i), va));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void axpy_stride2(float a, const float* x, float* y, std::size_t n) {
    const float32x4_t va = vdupq_n_f32(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4x2_t pair = vld2q_f32(x + 2 * i);  // val[0] holds even indices
        float32x4_t yv = vld1q_f32(y + i);
        vst1q_f32(y + i, vfmaq_f32(yv, pair.val[0], va));
    }
    for (; i < n; ++i) y[i] += a * x[2 * i];
}

void leaky_relu(float* x, std::size_t n, float slope) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t v = vld1q_f32(x + i);
        vst1q_f32(x + i, vmaxq_f32(v, vmulq_n_f32(v, slope)));
    }
    for (; i < n; ++i) x[i] = x[i] > 0.0f ? x[i] : slope * x[i];
}

double sum_abs_diff(const float* a, const float* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t af = vld1q_f32(a + i);
        float32x4_t bf = vld1q_f32(b + i);
        float64x2_t d0 = vsubq_f64(vcvt_f64_f32(vget_low_f32(af)),
                                   vcvt_f64_f32(vget_low_f32(bf)));
        float64x2_t d1 = vsubq_f64(vcvt_high_f64_f32(af), vcvt_high_f64_f32(bf));
        acc0 = vaddq_f64(acc0, vabsq_f64(d0));
        acc1 = vaddq_f64(acc1, vabsq_f64(d1));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) {
        double d = static_cast<double>(a[i]) - b[i];
        acc += d < 0.0 ? -d : d;
    }
    return acc;
}

double sum_sq_diff(const float* a, const float* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t af = vld1q_f32(a + i);
        float32x4_t bf = vld1q_f32(b + i);
        float64x2_t d0 = vsubq_f64(vcvt_f64_f32(vget_low_f32(af)),
                                   vcvt_f64_f32(vget_low_f32(bf)));
        float64x2_t d1 = vsubq_f64(vcvt_high_f64_f32(af), vcvt_high_f64_f32(bf));
        acc0 = vaddq_f64(acc0, vmulq_f64(d0, d0));
        acc1 = vaddq_f64(acc1, vmulq_f64(d1, d1));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) {
        double d = static_cast<double>(a[i]) - b[i];
        acc += d * d;
    }
    return acc;
}

void integral_plane(const float* src, std::size_t h, std::size_t w, double* out) {
    const std::size_t ow = w + 1;
    for (std::size_t x = 0; x < ow; ++x) out[x] = 0.0;
    const float64x2_t zero = vdupq_n_f64(0.0);
    for (std::size_t y = 0; y < h; ++y) {
        const float* src_row = src + y * w;
        const double* prev = out + y * ow;
        double* row = out + (y + 1) * ow;
        row[0] = 0.0;
        double carry = 0.0;
        std::size_t x = 0;
        for (; x + 2 <= w; x += 2) {
            float64x2_t v = vcvt_f64_f32(vld1_f32(src_row + x));
            v = vaddq_f64(v, vextq_f64(zero, v, 1));  // 2-lane inclusive scan
            double block = vgetq_lane_f64(v, 1);
            float64x2_t tot = vaddq_f64(v, vdupq_n_f64(carry));
            vst1q_f64(row + x + 1, vaddq_f64(tot, vld1q_f64(prev + x + 1)));
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
    std::size_t c = 0;
    for (; c + 2 <= channels; c += 2) {
        const double* p0 = it + c * stride;
        const double* p1 = p0 + stride;
        float64x2_t va = vcombine_f64(vld1_f64(p0 + a), vld1_f64(p1 + a));
        float64x2_t vb = vcombine_f64(vld1_f64(p0 + b), vld1_f64(p1 + b));
        float64x2_t vd = vcombine_f64(vld1_f64(p0 + d), vld1_f64(p1 + d));
        float64x2_t ve = vcombine_f64(vld1_f64(p0 + e), vld1_f64(p1 + e));
        float64x2_t sum = vaddq_f64(vsubq_f64(vsubq_f64(va, vb), vd), ve);
        vst1_f32(out + c, vcvt_f32_f64(sum));
    }
    for (; c < channels; ++c) {
        const double* p = it + c * stride;
        out[c] = static_cast<float>(p[a] - p[b] - p[d] + p[e]);
    }
}

}  // namespace difs::kernels::neon

#endif  // aarch64 / ARM_NEON
