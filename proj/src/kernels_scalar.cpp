#include "difs/kernels.hpp"

#include <cmath>

namespace difs::kernels::scalar {

void axpy(float a, const float* x, float* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpy_stride2(float a, const float* x, float* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[2 * i];
}

void leaky_relu(float* x, std::size_t n, float slope) {
    for (std::size_t i = 0; i < n; ++i) x[i] = x[i] > 0.0f ? x[i] : slope * x[i];
}

double sum_abs_diff(const float* a, const float* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::fabs(static_cast<double>(a[i]) - b[i]);
    return acc;
}

double sum_sq_diff(const float* a, const float* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = static_cast<double>(a[i]) - b[i];
        acc += d * d;
    }
    return acc;
}

void integral_plane(const float* src, std::size_t h, std::size_t w, double* out) {
    const std::size_t ow = w + 1;
    for (std::size_t x = 0; x < ow; ++x) out[x] = 0.0;
    for (std::size_t y = 0; y < h; ++y) {
        const float* src_row = src + y * w;
        const double* prev = out + y * ow;
        double* row = out + (y + 1) * ow;
        row[0] = 0.0;
        double run = 0.0;
        for (std::size_t x = 0; x < w; ++x) {
            run += src_row[x];
            row[x + 1] = prev[x + 1] + run;
        }
    }
}

void corner_sums(const double* it, std::size_t channels, std::size_t stride,
                 std::size_t a, std::size_t b, std::size_t d, std::size_t e, float* out) {
    for (std::size_t c = 0; c < channels; ++c) {
        const double* p = it + c * stride;
        out[c] = static_cast<float>(p[a] - p[b] - p[d] + p[e]);
    }
}

}  // namespace difs::kernels::scalar
