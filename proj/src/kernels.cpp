#include "difs/kernels.hpp"

#include <cstdlib>
#include <string>

#include "difs/errors.hpp"

namespace difs::kernels {

namespace {

struct OpsTable {
    void (*axpy)(float, const float*, float*, std::size_t);
    void (*axpy_stride2)(float, const float*, float*, std::size_t);
    void (*leaky_relu)(float*, std::size_t, float);
    double (*sum_abs_diff)(const float*, const float*, std::size_t);
    double (*sum_sq_diff)(const float*, const float*, std::size_t);
    void (*integral_plane)(const float*, std::size_t, std::size_t, double*);
    void (*corner_sums)(const double*, std::size_t, std::size_t, std::size_t, std::size_t,
                        std::size_t, std::size_t, float*);
};

constexpr OpsTable kScalarOps = {
    scalar::axpy,          scalar::axpy_stride2, scalar::leaky_relu, scalar::sum_abs_diff,
    scalar::sum_sq_diff,   scalar::integral_plane, scalar::corner_sums,
};

#if defined(DIFS_HAVE_AVX2_LANE)
constexpr OpsTable kAvx2Ops = {
    avx2::axpy,          avx2::axpy_stride2, avx2::leaky_relu, avx2::sum_abs_diff,
    avx2::sum_sq_diff,   avx2::integral_plane, avx2::corner_sums,
};
#endif

#if defined(DIFS_HAVE_NEON_LANE)
constexpr OpsTable kNeonOps = {
    neon::axpy,          neon::axpy_stride2, neon::leaky_relu, neon::sum_abs_diff,
    neon::sum_sq_diff,   neon::integral_plane, neon::corner_sums,
};
#endif

const OpsTable* table_for(Lane lane) {
    switch (lane) {
        case Lane::scalar:
            return &kScalarOps;
#if defined(DIFS_HAVE_AVX2_LANE)
        case Lane::avx2:
            return &kAvx2Ops;
#endif
#if defined(DIFS_HAVE_NEON_LANE)
        case Lane::neon:
            return &kNeonOps;
#endif
        default:
            return nullptr;
    }
}

Lane pick_default_lane() {
    if (const char* env = std::getenv("DIFS_KERNELS")) {
        std::string v(env);
        if (v == "scalar") return Lane::scalar;
        if (v == "avx2" && lane_supported(Lane::avx2)) return Lane::avx2;
        if (v == "neon" && lane_supported(Lane::neon)) return Lane::neon;
        // unusable value: fall through to autodetect
    }
#if defined(DIFS_HAVE_AVX2_LANE)
    if (lane_supported(Lane::avx2)) return Lane::avx2;
#endif
#if defined(DIFS_HAVE_NEON_LANE)
    if (lane_supported(Lane::neon)) return Lane::neon;
#endif
    return Lane::scalar;
}

// Mutable only through set_lane; the build-then-query discipline applies.
Lane g_lane = pick_default_lane();
const OpsTable* g_ops = table_for(pick_default_lane());

}  // namespace

Lane active_lane() { return g_lane; }

bool lane_supported(Lane lane) {
    switch (lane) {
        case Lane::scalar:
            return true;
        case Lane::avx2:
#if defined(DIFS_HAVE_AVX2_LANE) && defined(__GNUC__)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Lane::neon:
#if defined(DIFS_HAVE_NEON_LANE)
            return true;  // baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

void set_lane(Lane lane) {
    if (!lane_supported(lane))
        throw InputError(std::string("kernel lane not supported on this CPU: ") +
                         lane_name(lane));
    g_lane = lane;
    g_ops = table_for(lane);
}

const char* lane_name(Lane lane) {
    switch (lane) {
        case Lane::scalar:
            return "scalar";
        case Lane::avx2:
            return "avx2";
        case Lane::neon:
            return "neon";
    }
    return "?";
}

void axpy(float a, const float* x, float* y, std::size_t n) { g_ops->axpy(a, x, y, n); }

void axpy_stride2(float a, const float* x, float* y, std::size_t n) {
    g_ops->axpy_stride2(a, x, y, n);
}

void leaky_relu(float* x, std::size_t n, float slope) { g_ops->leaky_relu(x, n, slope); }

double sum_abs_diff(const float* a, const float* b, std::size_t n) {
    return g_ops->sum_abs_diff(a, b, n);
}

double sum_sq_diff(const float* a, const float* b, std::size_t n) {
    return g_ops->sum_sq_diff(a, b, n);
}

void integral_plane(const float* src, std::size_t h, std::size_t w, double* out) {
    g_ops->integral_plane(src, h, w, out);
}

void corner_sums(const double* it, std::size_t channels, std::size_t stride,
                 std::size_t a, std::size_t b, std::size_t d, std::size_t e, float* out) {
    g_ops->corner_sums(it, channels, stride, a, b, d, e, out);
}

}  // namespace difs::kernels
