#include "difs/tensor.hpp"

#include <string>

#include "difs/kernels.hpp"

namespace difs {

namespace {

void check_dims(int channels, int height, int width) {
    if (channels < 1 || height < 1 || width < 1)
        throw InputError("tensor dimensions must be >= 1, got " + std::to_string(channels) +
                         "x" + std::to_string(height) + "x" + std::to_string(width));
}

}  // namespace

Tensor3::Tensor3(int channels, int height, int width)
    : Tensor3(channels, height, width, 0.0f) {}

Tensor3::Tensor3(int channels, int height, int width, float fill)
    : channels_(channels), height_(height), width_(width) {
    check_dims(channels, height, width);
    data_.assign(static_cast<std::size_t>(channels) * height * width, fill);
}

void validate_region(const RegionI& r, int height, int width) {
    if (r.x1 < 0) throw BoundsError("region x1=" + std::to_string(r.x1) + " is negative");
    if (r.y1 < 0) throw BoundsError("region y1=" + std::to_string(r.y1) + " is negative");
    if (r.x1 >= r.x2)
        throw BoundsError("region x1=" + std::to_string(r.x1) + " must be < x2=" +
                          std::to_string(r.x2));
    if (r.y1 >= r.y2)
        throw BoundsError("region y1=" + std::to_string(r.y1) + " must be < y2=" +
                          std::to_string(r.y2));
    if (r.x2 > width)
        throw BoundsError("region x2=" + std::to_string(r.x2) + " exceeds map width " +
                          std::to_string(width));
    if (r.y2 > height)
        throw BoundsError("region y2=" + std::to_string(r.y2) + " exceeds map height " +
                          std::to_string(height));
}

IntegralTensor IntegralTensor::build(const Tensor3& t) {
    IntegralTensor out;
    out.channels_ = t.channels();
    out.height_ = t.height();
    out.width_ = t.width();
    out.data_.resize(static_cast<std::size_t>(t.channels()) * out.plane_stride());
    for (int c = 0; c < t.channels(); ++c) {
        kernels::integral_plane(t.plane(c), t.height(), t.width(),
                                out.data_.data() + c * out.plane_stride());
    }
    return out;
}

std::vector<float> region_sum_naive(const Tensor3& t, const RegionI& r) {
    validate_region(r, t.height(), t.width());
    std::vector<float> sums(t.channels());
    for (int c = 0; c < t.channels(); ++c) {
        const float* plane = t.plane(c);
        double acc = 0.0;
        for (int y = r.y1; y < r.y2; ++y) {
            const float* row = plane + static_cast<std::size_t>(y) * t.width();
            for (int x = r.x1; x < r.x2; ++x) acc += row[x];
        }
        sums[c] = static_cast<float>(acc);
    }
    return sums;
}

std::vector<float> region_sum_fast(const IntegralTensor& it, const RegionI& r) {
    validate_region(r, it.source_height(), it.source_width());
    const std::size_t row = static_cast<std::size_t>(it.source_width()) + 1;
    std::vector<float> sums(it.channels());
    kernels::corner_sums(it.plane(0), it.channels(), it.plane_stride(),
                         static_cast<std::size_t>(r.y2) * row + r.x2,
                         static_cast<std::size_t>(r.y1) * row + r.x2,
                         static_cast<std::size_t>(r.y2) * row + r.x1,
                         static_cast<std::size_t>(r.y1) * row + r.x1, sums.data());
    return sums;
}

}  // namespace difs
