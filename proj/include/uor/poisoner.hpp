#pragma once

#include "uor/common.hpp"
#include "uor/language_model.hpp"
#include "uor/rng.hpp"
#include "uor/vocabulary.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace uor {

struct CleanCorpus {
    std::string name;
    std::vector<Sentence> sentences;

    std::size_t size() const { return sentences.size(); }
    void validate() const;
};

struct InsertionPolicy {
    enum class Placement { uniform_random, min_perplexity };

    std::size_t copies = 3;
    Placement placement = Placement::uniform_random;
    std::uint64_t seed = 0;

    void validate() const;
};

std::string to_string(InsertionPolicy::Placement p);
InsertionPolicy::Placement parse_placement(const std::string& text);

struct PoisonedCorpus {
    std::vector<TokenId> triggers;
    std::vector<std::vector<Sentence>> per_trigger;  // [trigger][sentence]
    InsertionPolicy policy;
};

// Seed of the insertion stream for one (trigger slot, sentence) pair. It
// does not depend on the trigger's identity, so swapping a trigger token
// keeps every insertion position.
std::uint64_t insertion_seed(const InsertionPolicy& policy, std::size_t trigger_index, std::size_t sentence_index);

/// Inserts `policy.copies` copies of `trigger`. uniform_random draws each
/// copy's gap independently over the growing sequence; min_perplexity
/// places copies greedily at the lowest-perplexity gap (ties to the left).
Sentence insert_trigger(const Sentence& sentence, TokenId trigger, const InsertionPolicy& policy, Rng& rng,
                        const SentenceScorer* oracle = nullptr);

PoisonedCorpus poison_corpus(const CleanCorpus& corpus, std::span<const TokenId> triggers,
                             const InsertionPolicy& policy, const SentenceScorer* oracle = nullptr);

// Random token sequences for target-label probing. Special tokens and the
// excluded ids (the triggers) are never drawn.
std::vector<Sentence> random_probe_texts(const Vocabulary& vocab, std::size_t count,
                                         std::pair<std::size_t, std::size_t> length_range, std::uint64_t seed,
                                         std::span<const TokenId> excluded = {});

}  // namespace uor
