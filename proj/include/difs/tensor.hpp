#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "difs/errors.hpp"

namespace difs {

/// Dense channels x height x width activation volume, float32, stored
/// channel-major then row-major within a channel. Carrier for images,
/// intermediate feature maps and activation dumps.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(int channels, int height, int width);
    Tensor3(int channels, int height, int width, float fill);

    int channels() const { return channels_; }
    int height() const { return height_; }
    int width() const { return width_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    float& at(int c, int y, int x) { return data_[index(c, y, x)]; }
    float at(int c, int y, int x) const { return data_[index(c, y, x)]; }

    float* plane(int c) { return data_.data() + static_cast<std::size_t>(c) * plane_size(); }
    const float* plane(int c) const {
        return data_.data() + static_cast<std::size_t>(c) * plane_size();
    }
    std::size_t plane_size() const {
        return static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_);
    }

    std::span<float> data() { return data_; }
    std::span<const float> data() const { return data_; }

    bool same_shape(const Tensor3& other) const {
        return channels_ == other.channels_ && height_ == other.height_ &&
               width_ == other.width_;
    }

private:
    std::size_t index(int c, int y, int x) const {
        return (static_cast<std::size_t>(c) * height_ + y) * width_ + x;
    }

    int channels_ = 0;
    int height_ = 0;
    int width_ = 0;
    std::vector<float> data_;
};

/// Integer rectangle in feature-map cells: x1/y1 inclusive, x2/y2 exclusive.
struct RegionI {
    int x1 = 0;
    int y1 = 0;
    int x2 = 0;
    int y2 = 0;

    int width() const { return x2 - x1; }
    int height() const { return y2 - y1; }
    long long area() const { return static_cast<long long>(width()) * height(); }
};

/// Throws BoundsError naming the offending coordinate if `r` is degenerate
/// or does not fit a height x width map.
void validate_region(const RegionI& r, int height, int width);

/// Per-channel 2-D prefix sums in float64. Plane c has (height+1) x (width+1)
/// cells; cell (y, x) holds the sum of the source channel over rows [0, y)
/// and columns [0, x), so row 0 and column 0 are zero.
class IntegralTensor {
public:
    IntegralTensor() = default;
    static IntegralTensor build(const Tensor3& t);

    int channels() const { return channels_; }
    int source_height() const { return height_; }
    int source_width() const { return width_; }

    const double* plane(int c) const {
        return data_.data() + static_cast<std::size_t>(c) * plane_stride();
    }
    std::size_t plane_stride() const {
        return static_cast<std::size_t>(height_ + 1) * static_cast<std::size_t>(width_ + 1);
    }
    double at(int c, int y, int x) const {
        return plane(c)[static_cast<std::size_t>(y) * (width_ + 1) + x];
    }

private:
    int channels_ = 0;
    int height_ = 0;
    int width_ = 0;
    std::vector<double> data_;
};

/// Per-cell summation of `r` for every channel, float64 accumulation.
/// The reference route; region_sum_fast must agree with it within 1e-5
/// relative.
std::vector<float> region_sum_naive(const Tensor3& t, const RegionI& r);

/// Four-corner lookup on the integral volume, O(channels) per region.
std::vector<float> region_sum_fast(const IntegralTensor& it, const RegionI& r);

}  // namespace difs
