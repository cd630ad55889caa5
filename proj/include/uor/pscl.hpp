#pragma once

#include "uor/common.hpp"
#include "uor/encoder.hpp"

namespace uor {

struct PsclBatch {
    RepresentationBatch representations;
    double temperature = 0.5;
    bool normalize = true;

    // At least two classes, each with at least two samples.
    void validate() const;
};

struct LossWithGradient {
    double value = 0.0;
    Matrix gradient;  // dLoss/d(input vectors), same shape as the batch
};

/// Poisoned supervised contrastive loss over the clean class and the n
/// poisoned classes:
///   L = -1/N sum_i 1/|P(i)| sum_{p in P(i)} log softmax_{a != i}(z_i.z_a / tau)[p]
/// where P(i) holds the other samples of i's class.
double pscl_loss(const PsclBatch& batch);
LossWithGradient pscl_loss_and_gradient(const PsclBatch& batch);

/// Mean squared difference over batch and feature dimension, gradient taken
/// with respect to `backdoored`.
double clean_alignment_loss(const Matrix& backdoored, const Matrix& reference);
LossWithGradient clean_alignment_loss_and_gradient(const Matrix& backdoored, const Matrix& reference);

double total_loss(double lp, double lc, double lambda);

}  // namespace uor
