#pragma once

#include "uor/encoder.hpp"
#include "uor/poisoner.hpp"
#include "uor/pscl.hpp"
#include "uor/vocab_policy.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace uor {

/// First-order estimate of the loss change when trigger i is swapped for
/// each searchable token: score(i, w) = (e_w - e_{t_i}) . grad_i.
Matrix taylor_scores(const EncoderHandle& handle, std::span<const TokenId> current,
                     const std::vector<Vector>& grads, std::span<const TokenId> search_vocab);

struct CandidateSet {
    std::vector<std::vector<TokenId>> per_trigger;
};

// k lowest-scoring tokens per trigger (ties by search-vocabulary order);
// the incumbent is appended when it did not make the cut.
CandidateSet top_k_candidates(const Matrix& scores, std::size_t k, std::span<const TokenId> search_vocab,
                              std::span<const TokenId> incumbents);

struct SearchConfig {
    std::size_t k = 10;
    std::size_t beam_width = 5;
    std::size_t iterations = 3;
    std::size_t batch_sentences = 128;
    double temperature = 0.5;
    bool normalize_representations = true;
    InsertionPolicy policy;  // uniform_random, 3 copies
    RepresentationTarget target;
    std::uint64_t seed = 0;

    void validate() const;
};

/// True PSCL objective on a fixed, seeded sample of clean sentences that are
/// poisoned on the fly. Representations are cached per (trigger slot,
/// token); insertion positions depend on the slot only, so a slot's
/// poisoned sentences differ between tokens by the inserted id alone.
class TriggerObjective {
public:
    TriggerObjective(const EncoderHandle& handle, const CleanCorpus& corpus, std::size_t num_triggers,
                     const SearchConfig& config);

    double loss(std::span<const TokenId> triggers);

    // Gradient of the loss with respect to each trigger's embedding row.
    std::vector<Vector> gradients(std::span<const TokenId> triggers);

    std::size_t batch_sentences() const { return sample_.size(); }
    const std::vector<Sentence>& poisoned_sentences(std::size_t slot, TokenId token);

private:
    PsclBatch assemble(std::span<const TokenId> triggers);
    const Matrix& poisoned_reps(std::size_t slot, TokenId token);

    const EncoderHandle& handle_;
    SearchConfig config_;
    std::size_t num_triggers_;
    std::vector<Sentence> sample_;
    Matrix clean_reps_;
    std::map<std::pair<std::size_t, TokenId>, std::vector<Sentence>> sentences_;
    std::map<std::pair<std::size_t, TokenId>, Matrix> reps_;
};

struct SearchTraceRecord {
    std::size_t iteration = 0;
    std::size_t position = 0;
    std::vector<double> beam_losses;
    std::vector<std::vector<std::string>> beam_tokens;
};

struct SearchResult {
    TriggerSet triggers;
    double initial_loss = 0.0;
    std::vector<SearchTraceRecord> trace;
};

/// Beam search over trigger combinations. Each iteration sweeps the trigger
/// slots; every beam entry is expanded with that slot's Taylor candidates and
/// re-scored by the true loss. The result never scores worse than `initial`.
SearchResult beam_search_triggers(const EncoderHandle& handle, const CleanCorpus& corpus_sample,
                                  const TriggerSet& initial, const SearchVocabulary& sv, const SearchConfig& config);

std::string to_json_line(const SearchTraceRecord& record);

}  // namespace uor
