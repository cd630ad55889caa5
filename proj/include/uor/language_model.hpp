#pragma once

#include "uor/common.hpp"

#include <span>
#include <unordered_map>
#include <vector>

namespace uor {

/// Sentence-level perplexity oracle.
class SentenceScorer {
public:
    virtual ~SentenceScorer() = default;
    virtual double perplexity(std::span<const TokenId> sentence) const = 0;
};

struct CacheLmConfig {
    double discount = 0.75;      // absolute discount for bigram counts
    double cache_weight = 0.3;   // mixture weight of the in-sentence cache
};

/// Small autoregressive language model: interpolated absolute-discount
/// bigram over an add-one unigram, mixed with a unigram cache of the
/// sentence prefix. The cache makes a token that already occurred in the
/// sentence cheap to repeat, the in-context copying behaviour of large LMs.
class CacheBigramLm : public SentenceScorer {
public:
    CacheBigramLm(std::size_t vocab_size, CacheLmConfig config = {});

    void fit(std::span<const Sentence> corpus);

    // Conditional probability of `token` after `prefix`.
    double probability(std::span<const TokenId> prefix, TokenId token) const;

    // exp of the mean negative log-likelihood over tokens plus end of sentence.
    double perplexity(std::span<const TokenId> sentence) const override;

private:
    double bigram(TokenId prev, TokenId token) const;

    std::size_t vocab_size_;
    CacheLmConfig config_;
    TokenId bos_, eos_;
    std::vector<double> unigram_counts_;
    double unigram_total_ = 0.0;
    std::unordered_map<std::int64_t, double> bigram_counts_;
    std::vector<double> context_totals_;
    std::vector<double> context_types_;
};

}  // namespace uor
