#pragma once

#include "uor/common.hpp"
#include "uor/vocabulary.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace uor {

struct FrequencyTable {
    std::unordered_map<std::string, double> entries;

    // Two columns per line: token, score. Blank lines and '#' comments skipped.
    static FrequencyTable load(const std::string& path);
    void save(const std::string& path) const;

    // Tokens absent from the table count as the rarest (frequency 0).
    double frequency(const std::string& token) const;
};

// Table entries that do not exist in `vocab`, sorted.
std::vector<std::string> unmatched_tokens(const FrequencyTable& table, const Vocabulary& vocab);

std::unordered_set<std::string> load_stopwords(const std::string& path);
// Standard English stopword list shipped with the library.
const std::vector<std::string>& default_english_stopwords();

struct SearchVocabulary {
    std::vector<std::string> tokens;  // ascending frequency, ties by vocabulary index
    std::size_t source_size = 0;
    std::vector<std::string> filters_applied;
    std::vector<std::string> warnings;

    std::size_t size() const { return tokens.size(); }
};

/// Rare whole-word searchable vocabulary. Special tokens, continuation
/// subwords, stopwords and duplicates are removed first, then the
/// `target_size` lowest-frequency survivors are kept.
SearchVocabulary build_search_vocab(const Vocabulary& vocab, const FrequencyTable& freq,
                                    const std::unordered_set<std::string>& stopwords,
                                    std::size_t target_size = 5000);

struct TriggerSet {
    enum class Provenance { initial_rare, gradient_searched };

    std::vector<std::string> tokens;
    Provenance provenance = Provenance::initial_rare;
    std::optional<double> score;  // PSCL loss at selection time, when known

    std::size_t size() const { return tokens.size(); }
    std::vector<TokenId> ids(const Vocabulary& vocab) const;
    void validate() const;  // tokens distinct and non-empty
};

std::string to_string(TriggerSet::Provenance p);
TriggerSet::Provenance parse_provenance(const std::string& text);

// n distinct tokens drawn without replacement from `sv`.
TriggerSet initial_triggers(const SearchVocabulary& sv, std::size_t n, std::uint64_t seed);

}  // namespace uor
