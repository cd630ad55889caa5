#pragma once

#include "uor/downstream.hpp"
#include "uor/poisoner.hpp"
#include "uor/vocab_policy.hpp"

#include <memory>
#include <string>
#include <unordered_set>

namespace uor {

/// Synthetic stand-in for the public data: a pseudo-word vocabulary with a
/// Zipfian unlabeled corpus and a two-class cue-word task. Tail words never
/// occur only sporadically, so they make up the rare end of the frequency
/// table where trigger candidates come from.
struct ToyWorldConfig {
    std::uint64_t seed = 7;
    std::size_t content_words = 1200;
    std::size_t tail_words = 600;
    std::size_t subwords = 100;
    std::size_t stopwords = 40;
    std::size_t cue_words_per_class = 16;
    std::size_t corpus_sentences = 4000;
    std::size_t train_size = 2000;
    std::size_t test_size = 400;
    std::size_t min_length = 8;
    std::size_t max_length = 24;
    double stopword_rate = 0.3;
    // Per-sentence chance of one uniformly drawn tail word.
    double tail_rate = 0.5;
    // Per-token chance of a continuation piece after a content word.
    double subword_rate = 0.05;
    double zipf_exponent = 1.1;
    double conflicting_cue_rate = 0.15;
    double label_noise = 0.02;
};

struct ToyWorld {
    std::shared_ptr<const Vocabulary> vocab;
    FrequencyTable freq;
    std::unordered_set<std::string> stopwords;
    CleanCorpus corpus;
    LabeledDataset train;
    LabeledDataset test;
};

ToyWorld generate_toy_world(const ToyWorldConfig& config);

// vocab.txt, freq.tsv, stopwords.txt, corpus.txt, train.jsonl, test.jsonl.
void write_toy_world(const std::string& directory, const ToyWorld& world);

}  // namespace uor
