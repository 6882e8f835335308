#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace qecnn {

// Training hyper-parameters: initial rate, gradient-restriction beta, and
// the step decay schedule (rate divided by decay_factor every decay_epochs).
struct TrainConfig {
    double learning_rate = 1e-1;
    double clip_beta = 1e-2;
    double decay_factor = 10.0;
    int decay_epochs = 40;
    int batch_size = 128;

    void validate() const {
        if (learning_rate <= 0) throw std::invalid_argument("learning_rate must be > 0");
        if (clip_beta <= 0) throw std::invalid_argument("clip_beta must be > 0");
        if (decay_factor <= 1) throw std::invalid_argument("decay_factor must be > 1");
        if (decay_epochs <= 0) throw std::invalid_argument("decay_epochs must be > 0");
        if (batch_size <= 0) throw std::invalid_argument("batch_size must be > 0");
    }
};

inline double effective_learning_rate(const TrainConfig& cfg, int epoch) {
    return cfg.learning_rate / std::pow(cfg.decay_factor, epoch / cfg.decay_epochs);
}

// Adjustable gradient clipping: every component is restricted to
// [-beta/rate, +beta/rate] at the current decayed rate before the update.
template <typename T>
void sgd_step(std::span<T> params, std::span<const T> grads, const TrainConfig& cfg, int epoch) {
    if (params.size() != grads.size())
        throw std::invalid_argument("sgd_step: params/grads size mismatch");
    const T rate = static_cast<T>(effective_learning_rate(cfg, epoch));
    const T bound = static_cast<T>(cfg.clip_beta) / rate;
    for (size_t i = 0; i < params.size(); ++i) {
        T g = grads[i];
        if (g > bound) g = bound;
        if (g < -bound) g = -bound;
        params[i] -= rate * g;
    }
}

} // namespace qecnn
