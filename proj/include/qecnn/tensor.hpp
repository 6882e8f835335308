#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qecnn {

// Dense (channels, height, width) activation array in row-major order.
// Float for inference, double for the gradient-check builds.
template <typename T>
struct TensorT {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<T> data;

    TensorT() = default;
    TensorT(int c, int h, int w)
        : channels(c), height(h), width(w), data(static_cast<size_t>(c) * h * w, T(0)) {
        if (c <= 0 || h <= 0 || w <= 0)
            throw std::invalid_argument("tensor dimensions must be positive");
    }

    size_t size() const { return data.size(); }

    T* plane(int c) { return data.data() + static_cast<size_t>(c) * height * width; }
    const T* plane(int c) const { return data.data() + static_cast<size_t>(c) * height * width; }

    T& at(int c, int y, int x) {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }
    T at(int c, int y, int x) const {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }

    bool same_shape(const TensorT& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }
};

using Tensor = TensorT<float>;

// Single-channel 8-bit luma image; the unit of enhancement.
struct Plane {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;

    Plane() = default;
    Plane(int w, int h, uint8_t fill = 0)
        : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {
        if (w <= 0 || h <= 0)
            throw std::invalid_argument("plane dimensions must be positive");
    }

    uint8_t& at(int y, int x) { return pixels[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int y, int x) const { return pixels[static_cast<size_t>(y) * width + x]; }

    bool operator==(const Plane& o) const {
        return width == o.width && height == o.height && pixels == o.pixels;
    }
};

// [0,255] -> [0,1]
template <typename T = float>
inline TensorT<T> plane_to_tensor(const Plane& p) {
    TensorT<T> t(1, p.height, p.width);
    for (size_t i = 0; i < p.pixels.size(); ++i)
        t.data[i] = static_cast<T>(p.pixels[i]) / T(255);
    return t;
}

// clamp to [0,1], rescale, round to nearest 8-bit value
template <typename T>
inline Plane tensor_to_plane(const TensorT<T>& t) {
    if (t.channels != 1)
        throw std::invalid_argument("tensor_to_plane expects a single channel");
    Plane p(t.width, t.height);
    for (size_t i = 0; i < t.data.size(); ++i) {
        T v = t.data[i];
        if (v < T(0)) v = T(0);
        if (v > T(1)) v = T(1);
        p.pixels[i] = static_cast<uint8_t>(v * T(255) + T(0.5));
    }
    return p;
}

} // namespace qecnn
