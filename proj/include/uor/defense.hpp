#pragma once

#include "uor/encoder.hpp"
#include "uor/language_model.hpp"
#include "uor/poisoner.hpp"

#include <vector>

namespace uor {

struct DefenseConfig {
    enum class Kind { onion, reinit, prune };

    Kind kind = Kind::onion;
    double onion_threshold = 0.0;
    std::vector<std::size_t> reinit_layers;
    double prune_ratio = 0.0;

    std::string name() const;
};

/// Onion filtering: a token's suspicion is ppl(sentence) - ppl(sentence
/// without it); tokens above `threshold` are removed. At least one token
/// always survives (the least suspicious one).
Sentence onion_filter(const Sentence& sentence, const SentenceScorer& scorer, double threshold = 0.0);

// Copy of `handle` with the listed transformer layers redrawn from the initializer.
EncoderHandle reinit_layers(const EncoderHandle& handle, const std::vector<std::size_t>& layers, std::uint64_t seed);

// Mean absolute feed-forward activation per hidden unit over a corpus, one
// 1 x ffn_dim row per layer.
std::vector<Matrix> ffn_activation_means(const EncoderHandle& handle, const CleanCorpus& corpus);

/// Fine-pruning: per feed-forward layer, mask the `ratio` fraction of hidden
/// units with the lowest mean absolute activation on the calibration corpus.
EncoderHandle prune_neurons(const EncoderHandle& handle, double ratio, const CleanCorpus& calibration);

}  // namespace uor
