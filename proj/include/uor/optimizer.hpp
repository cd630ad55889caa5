#pragma once

#include "uor/common.hpp"

#include <vector>

namespace uor {

struct AdamWConfig {
    double learning_rate = 2e-5;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double weight_decay = 0.01;
    double max_grad_norm = 1.0;  // <= 0 disables clipping
};

/// Decoupled-weight-decay Adam over an ordered list of parameter matrices.
/// The parameter list passed to step() must keep the same order and shapes
/// for the optimizer's lifetime.
class AdamW {
public:
    explicit AdamW(AdamWConfig config) : config_(config) {}

    void step(const std::vector<Matrix*>& params, const std::vector<const Matrix*>& grads);

    const AdamWConfig& config() const { return config_; }
    long steps() const { return steps_; }

private:
    AdamWConfig config_;
    std::vector<Matrix> m_, v_;
    long steps_ = 0;
};

}  // namespace uor
