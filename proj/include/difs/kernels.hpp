#pragma once

#include <cstddef>
#include <string>

namespace difs::kernels {

// Every arithmetic inner loop has a scalar reference implementation and,
// where the platform provides one, a SIMD variant with identical semantics.
// The active lane is picked once at startup (best supported), can be forced
// with the DIFS_KERNELS environment variable ("scalar", "avx2", "neon"),
// and swapped at runtime for equivalence testing.
enum class Lane { scalar, avx2, neon };

Lane active_lane();
bool lane_supported(Lane lane);
void set_lane(Lane lane);  // throws InputError if unsupported on this CPU
const char* lane_name(Lane lane);

// y[i] += a * x[i]
void axpy(float a, const float* x, float* y, std::size_t n);

// y[i] += a * x[2*i]  (stride-2 convolution rows)
void axpy_stride2(float a, const float* x, float* y, std::size_t n);

// x[i] = x[i] > 0 ? x[i] : slope * x[i], slope in [0, 1)
void leaky_relu(float* x, std::size_t n, float slope);

// sum_i |a[i] - b[i]|, float64 accumulation
double sum_abs_diff(const float* a, const float* b, std::size_t n);

// sum_i (a[i] - b[i])^2, float64 accumulation
double sum_sq_diff(const float* a, const float* b, std::size_t n);

// Writes the (h+1) x (w+1) float64 prefix-sum plane of an h x w float32
// plane. Row 0 and column 0 of the output are zero.
void integral_plane(const float* src, std::size_t h, std::size_t w, double* out);

// out[c] = it[c*stride + a] - it[c*stride + b] - it[c*stride + d] + it[c*stride + e]
// for c in [0, channels): the four-corner region sum on a channel-major
// integral volume, emitted as float32. All lanes evaluate the corners in
// this exact order, so results are bit-identical across lanes.
void corner_sums(const double* it, std::size_t channels, std::size_t stride,
                 std::size_t a, std::size_t b, std::size_t d, std::size_t e, float* out);

// Per-lane entry points, exposed for equivalence tests.
namespace scalar {
void axpy(float a, const float* x, float* y, std::size_t n);
void axpy_stride2(float a, const float* x, float* y, std::size_t n);
void leaky_relu(float* x, std::size_t n, float slope);
double sum_abs_diff(const float* a, const float* b, std::size_t n);
double sum_sq_diff(const float* a, const float* b, std::size_t n);
void integral_plane(const float* src, std::size_t h, std::size_t w, double* out);
void corner_sums(const double* it, std::size_t channels, std::size_t stride,
                 std::size_t a, std::size_t b, std::size_t d, std::size_t e, float* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DIFS_HAVE_AVX2_LANE 1
namespace avx2 {
void axpy(float a, const float* x, float* y, std::size_t n);
void axpy_stride2(float a, const float* x, float* y, std::size_t n);
void leaky_relu(float* x, std::size_t n, float slope);
double sum_abs_diff(const float* a, const float* b, std::size_t n);
double sum_sq_diff(const float* a, const float* b, std::size_t n);
void integral_plane(const float* src, std::size_t h, std::size_t w, double* out);
void corner_sums(const double* it, std::size_t channels, std::size_t stride,
                 std::size_t a, std::size_t b, std::size_t d, std::size_t e, float* out);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define DIFS_HAVE_NEON_LANE 1
namespace neon {
void axpy(float a, const float* x, float* y, std::size_t n);
void axpy_stride2(float a, const float* x, float* y, std::size_t n);
void leaky_relu(float* x, std::size_t n, float slope);
double sum_abs_diff(const float* a, const float* b, std::size_t n);
double sum_sq_diff(const float* a, const float* b, std::size_t n);
void integral_plane(const float* src, std::size_t h, std::size_t w, double* out);
void corner_sums(const double* it, std::size_t channels, std::size_t stride,
                 std::size_t a, std::size_t b, std::size_t d, std::size_t e, float* out);
}  // namespace neon
#endif

}  // namespace difs::kernels
