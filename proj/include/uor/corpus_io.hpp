#pragma once

#include "uor/downstream.hpp"
#include "uor/poisoner.hpp"
#include "uor/vocab_policy.hpp"

#include <string>
#include <utility>
#include <vector>

namespace uor {

struct TextExample {
    std::string text;
    int label = 0;
};

// Line-delimited {"text": ..., "label": ...} records.
std::vector<TextExample> read_jsonl(const std::string& path);
void write_jsonl(const std::string& path, const std::vector<TextExample>& examples);

// Whitespace tokenization; unknown words map to [UNK] when the vocabulary
// has one and are rejected otherwise.
Sentence tokenize(const Vocabulary& vocab, const std::string& text);

/// Labeled dataset from JSONL. `num_labels` <= 0 infers max label + 1.
LabeledDataset load_labeled_dataset(const std::string& path, const Vocabulary& vocab, LabeledDataset::Split split,
                                    int num_labels = 0);
void save_labeled_dataset(const std::string& path, const LabeledDataset& dataset, const Vocabulary& vocab);

// One sentence per line; a .jsonl file is read through its "text" fields.
CleanCorpus load_clean_corpus(const std::string& path, const Vocabulary& vocab, const std::string& name = "");
void save_clean_corpus(const std::string& path, const CleanCorpus& corpus, const Vocabulary& vocab);

// trigger_<i>.txt per trigger plus manifest.json with the tokens and policy.
void save_poisoned_corpus(const std::string& directory, const PoisonedCorpus& corpus, const Vocabulary& vocab);
PoisonedCorpus load_poisoned_corpus(const std::string& directory, const Vocabulary& vocab);

void save_trigger_set(const std::string& path, const TriggerSet& triggers);
TriggerSet load_trigger_set(const std::string& path);

// Writes `content` to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace uor
