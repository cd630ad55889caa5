#pragma once

#include "uor/encoder.hpp"
#include "uor/poisoner.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace uor {

struct TrainConfig {
    double lambda = 1.0;
    double temperature = 0.5;
    std::size_t epochs = 15;
    std::size_t batch_size = 16;
    std::vector<double> learning_rate_grid = {2e-5, 3e-5, 5e-5, 1e-4};
    std::uint64_t seed = 0;
    bool normalize_representations = true;
    std::size_t grad_accumulation = 4;
    double weight_decay = 0.01;
    // Caps optimizer steps; 0 leaves the weights untouched.
    std::optional<std::size_t> max_steps;

    void validate() const;
    // Sentences drawn per micro-batch: ceil(batch_size / (n + 1)).
    std::size_t sentences_per_batch(std::size_t num_triggers) const;
};

struct BackdoorModelPair {
    EncoderHandle backdoored;  // trainable
    EncoderHandle reference;   // frozen clean copy

    static BackdoorModelPair from_clean(const EncoderHandle& clean);
};

struct TrainLogRecord {
    std::size_t epoch = 0;
    std::size_t step = 0;
    double lp = 0.0;
    double lc = 0.0;
    double total = 0.0;
};

struct TrainResult {
    EncoderHandle model;
    double learning_rate = 0.0;
    std::vector<TrainLogRecord> steps;
    std::vector<TrainLogRecord> epochs;  // per-epoch means, step = last step of the epoch
};

struct TrainOptions {
    // When set, the final model, a manifest and the log are written here,
    // plus one checkpoint per epoch under epoch_<k>/.
    std::string output_dir;
    bool checkpoint_every_epoch = true;
    std::vector<std::string> trigger_tokens;  // recorded in the manifest
};

/// Backdoor training with L = L_p + lambda * L_c. Every micro-batch stacks
/// the clean version and all n poisoned versions of the same sentences.
/// With more than one learning rate in the grid, each is trained and the
/// lowest final-epoch total loss wins.
TrainResult train_backdoor(const BackdoorModelPair& pair, const CleanCorpus& clean, const PoisonedCorpus& poisoned,
                           const RepresentationTarget& target, const TrainConfig& config,
                           const TrainOptions& options = {});

std::string to_json_line(const TrainLogRecord& record);

}  // namespace uor
