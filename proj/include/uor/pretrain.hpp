#pragma once

#include "uor/encoder.hpp"
#include "uor/poisoner.hpp"

#include <vector>

namespace uor {

// Minimal masked-language-model seeding run for the toy encoder, with a
// decoder tied to the token embedding table.
struct PretrainConfig {
    std::size_t epochs = 2;
    std::size_t batch_size = 32;
    double learning_rate = 1e-3;
    double mask_probability = 0.15;
    double weight_decay = 0.01;
    std::uint64_t seed = 0;
};

struct PretrainLogRecord {
    std::size_t epoch = 0;
    double loss = 0.0;
    double masked_accuracy = 0.0;
};

std::vector<PretrainLogRecord> pretrain_mlm(EncoderHandle& handle, const CleanCorpus& corpus,
                                            const PretrainConfig& config);

}  // namespace uor
