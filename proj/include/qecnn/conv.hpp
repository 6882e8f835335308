#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qecnn/tensor.hpp"

namespace qecnn {

template <typename T>
inline T prelu(T x, T slope) {
    return std::max(T(0), x) + slope * std::min(T(0), x);
}

// Same-size 2-D convolution layer. One learnable PReLU slope shared by all
// output channels; the final layer of each network runs without activation.
template <typename T>
struct ConvLayerT {
    int kernel_h = 0;
    int kernel_w = 0;
    int in_channels = 0;
    int out_channels = 0;
    std::vector<T> weights; // (out, in, kh, kw)
    std::vector<T> bias;    // (out)
    T prelu_slope = T(0.25);
    bool has_activation = true;

    ConvLayerT() = default;
    ConvLayerT(int kh, int kw, int in_c, int out_c, bool activation = true)
        : kernel_h(kh), kernel_w(kw), in_channels(in_c), out_channels(out_c),
          weights(static_cast<size_t>(out_c) * in_c * kh * kw, T(0)),
          bias(static_cast<size_t>(out_c), T(0)), has_activation(activation) {
        if (kh <= 0 || kw <= 0 || (kh % 2) == 0 || (kw % 2) == 0)
            throw std::invalid_argument("kernel dimensions must be odd and positive");
        if (in_c <= 0 || out_c <= 0)
            throw std::invalid_argument("channel counts must be positive");
    }

    T& w(int o, int i, int ky, int kx) {
        return weights[((static_cast<size_t>(o) * in_channels + i) * kernel_h + ky) * kernel_w + kx];
    }
    T w(int o, int i, int ky, int kx) const {
        return weights[((static_cast<size_t>(o) * in_channels + i) * kernel_h + ky) * kernel_w + kx];
    }
};

using ConvLayer = ConvLayerT<float>;

// Zero-padded same-size convolution, stride 1. The accumulation order per
// output pixel is fixed (channel, then kernel row/col), which keeps results
// bitwise reproducible across callers and thread counts.
template <typename T>
TensorT<T> conv2d_forward(const TensorT<T>& input, const ConvLayerT<T>& layer) {
    if (input.channels != layer.in_channels)
        throw std::invalid_argument("conv2d_forward: input has " + std::to_string(input.channels) +
                                    " channels, layer expects " + std::to_string(layer.in_channels));
    const int h = input.height, w = input.width;
    const int pad_y = layer.kernel_h / 2, pad_x = layer.kernel_w / 2;
    TensorT<T> out(layer.out_channels, h, w);

    for (int o = 0; o < layer.out_channels; ++o) {
        T* op = out.plane(o);
        const T b = layer.bias[o];
        for (size_t i = 0; i < static_cast<size_t>(h) * w; ++i) op[i] = b;
        for (int i = 0; i < layer.in_channels; ++i) {
            const T* ip = input.plane(i);
            for (int ky = 0; ky < layer.kernel_h; ++ky) {
                const int dy = ky - pad_y;
                const int y0 = std::max(0, -dy), y1 = std::min(h, h - dy);
                for (int kx = 0; kx < layer.kernel_w; ++kx) {
                    const int dx = kx - pad_x;
                    const T wv = layer.w(o, i, ky, kx);
                    if (wv == T(0)) continue;
                    const int x0 = std::max(0, -dx), x1 = std::min(w, w - dx);
                    for (int y = y0; y < y1; ++y) {
                        T* orow = op + static_cast<size_t>(y) * w;
                        const T* irow = ip + static_cast<size_t>(y + dy) * w + dx;
                        for (int x = x0; x < x1; ++x) orow[x] += wv * irow[x];
                    }
                }
            }
        }
        if (layer.has_activation) {
            const T a = layer.prelu_slope;
            for (size_t i = 0; i < static_cast<size_t>(h) * w; ++i) op[i] = prelu(op[i], a);
        }
    }
    return out;
}

// Pre-activation variant used by training: returns W*x + B without PReLU so
// the backward pass can branch on the stored pre-activation sign.
template <typename T>
TensorT<T> conv2d_preact(const TensorT<T>& input, const ConvLayerT<T>& layer) {
    ConvLayerT<T> linear = layer;
    linear.has_activation = false;
    return conv2d_forward(input, linear);
}

template <typename T>
struct ConvGrads {
    std::vector<T> weights;
    std::vector<T> bias;
    T prelu_slope = T(0);
};

// dPReLU/dz on the stored pre-activation, dPReLU/da accumulated over pixels.
// grad_out is rewritten in place into the gradient w.r.t. the pre-activation.
template <typename T>
T prelu_backward_inplace(TensorT<T>& grad_out, const TensorT<T>& preact, T slope) {
    T grad_slope = T(0);
    for (size_t i = 0; i < grad_out.data.size(); ++i) {
        const T z = preact.data[i];
        if (z < T(0)) {
            grad_slope += grad_out.data[i] * z;
            grad_out.data[i] *= slope;
        }
    }
    return grad_slope;
}

// Gradients of the linear convolution. grad_out must be the gradient w.r.t.
// the pre-activation output. Returns parameter grads; optionally accumulates
// the gradient w.r.t. the input (skipped for the first layer).
template <typename T>
ConvGrads<T> conv2d_backward(const TensorT<T>& input, const ConvLayerT<T>& layer,
                             const TensorT<T>& grad_out, TensorT<T>* grad_input) {
    if (input.channels != layer.in_channels || grad_out.channels != layer.out_channels ||
        grad_out.height != input.height || grad_out.width != input.width)
        throw std::runtime_error("conv2d_backward: activation/layer shape mismatch");

    const int h = input.height, w = input.width;
    const int pad_y = layer.kernel_h / 2, pad_x = layer.kernel_w / 2;
    ConvGrads<T> g;
    g.weights.assign(layer.weights.size(), T(0));
    g.bias.assign(layer.bias.size(), T(0));

    for (int o = 0; o < layer.out_channels; ++o) {
        const T* gp = grad_out.plane(o);
        T bsum = T(0);
        for (size_t i = 0; i < static_cast<size_t>(h) * w; ++i) bsum += gp[i];
        g.bias[o] = bsum;

        for (int i = 0; i < layer.in_channels; ++i) {
            const T* ip = input.plane(i);
            for (int ky = 0; ky < layer.kernel_h; ++ky) {
                const int dy = ky - pad_y;
                const int y0 = std::max(0, -dy), y1 = std::min(h, h - dy);
                for (int kx = 0; kx < layer.kernel_w; ++kx) {
                    const int dx = kx - pad_x;
                    const int x0 = std::max(0, -dx), x1 = std::min(w, w - dx);
                    T acc = T(0);
                    for (int y = y0; y < y1; ++y) {
                        const T* grow = gp + static_cast<size_t>(y) * w;
                        const T* irow = ip + static_cast<size_t>(y + dy) * w + dx;
                        for (int x = x0; x < x1; ++x) acc += grow[x] * irow[x];
                    }
                    g.weights[((static_cast<size_t>(o) * layer.in_channels + i) * layer.kernel_h + ky) *
                                  layer.kernel_w + kx] = acc;
                }
            }
        }
    }

    if (grad_input) {
        if (!grad_input->same_shape(input))
            throw std::runtime_error("conv2d_backward: grad_input shape mismatch");
        for (int o = 0; o < layer.out_channels; ++o) {
            const T* gp = grad_out.plane(o);
            for (int i = 0; i < layer.in_channels; ++i) {
                T* dip = grad_input->plane(i);
                for (int ky = 0; ky < layer.kernel_h; ++ky) {
                    const int dy = ky - pad_y;
                    const int y0 = std::max(0, -dy), y1 = std::min(h, h - dy);
                    for (int kx = 0; kx < layer.kernel_w; ++kx) {
                        const int dx = kx - pad_x;
                        const T wv = layer.w(o, i, ky, kx);
                        if (wv == T(0)) continue;
                        const int x0 = std::max(0, -dx), x1 = std::min(w, w - dx);
                        for (int y = y0; y < y1; ++y) {
                            const T* grow = gp + static_cast<size_t>(y) * w;
                            T* irow = dip + static_cast<size_t>(y + dy) * w + dx;
                            for (int x = x0; x < x1; ++x) irow[x] += wv * grow[x];
                        }
                    }
                }
            }
        }
    }
    return g;
}

} // namespace qecnn
