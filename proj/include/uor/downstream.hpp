#pragma once

#include "uor/encoder.hpp"
#include "uor/poisoner.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace uor {

struct LabeledDataset {
    enum class Split { train, test };

    std::vector<Sentence> sentences;
    std::vector<int> labels;
    int num_labels = 2;
    Split split = Split::train;

    std::size_t size() const { return sentences.size(); }
    void validate() const;
};

struct ClassificationHead {
    Matrix weight;  // hidden x labels
    Matrix bias;    // 1 x labels
};

struct DownstreamModel {
    EncoderHandle encoder;
    ClassificationHead head;
    RepresentationTarget target;

    int num_labels() const { return static_cast<int>(head.weight.cols()); }
};

// Zero bias, small seeded uniform weights.
DownstreamModel make_downstream_model(const EncoderHandle& encoder, int num_labels, const RepresentationTarget& target,
                                      std::uint64_t seed);

struct FinetuneConfig {
    double learning_rate = 2e-5;
    std::size_t batch_size = 32;
    std::size_t epochs = 3;
    double weight_decay = 0.01;
    std::uint64_t seed = 0;
};

struct FinetuneLogRecord {
    std::size_t epoch = 0;
    double train_loss = 0.0;
    double test_acc = -1.0;  // negative when no test split was given
};

struct FinetuneResult {
    DownstreamModel model;
    std::vector<FinetuneLogRecord> log;
};

/// Cross-entropy fine-tuning of encoder and head together.
FinetuneResult finetune(const DownstreamModel& model, const LabeledDataset& train, const LabeledDataset* test,
                        const FinetuneConfig& config);

Matrix logits(const DownstreamModel& model, std::span<const Sentence> sentences);
// Argmax over head outputs; ties go to the lower label.
std::vector<int> predict(const DownstreamModel& model, std::span<const Sentence> sentences);

struct TargetLabel {
    int label = 0;
    double vote_fraction = 0.0;
    std::vector<double> votes;  // share of probes per label
};

struct TargetLabelMap {
    std::map<std::size_t, TargetLabel> entries;  // trigger index (0-based) -> label

    const TargetLabel& at(std::size_t trigger) const;
};

enum class ProbeMode {
    inserted,      // random texts with the trigger inserted per policy
    bare_trigger,  // the trigger token on its own
};

using Predictor = std::function<std::vector<int>(std::span<const Sentence>)>;

/// Majority label of the model on probes carrying each trigger.
TargetLabelMap determine_target_labels(const Predictor& predictor, int num_labels, std::span<const TokenId> triggers,
                                       std::span<const Sentence> probes, const InsertionPolicy& policy,
                                       ProbeMode mode = ProbeMode::inserted);
TargetLabelMap determine_target_labels(const DownstreamModel& model, std::span<const TokenId> triggers,
                                       std::span<const Sentence> probes, const InsertionPolicy& policy,
                                       ProbeMode mode = ProbeMode::inserted);

// encoder/ checkpoint plus head.json (weights, bias, target).
void save_downstream_model(const std::string& directory, const DownstreamModel& model);
DownstreamModel load_downstream_model(const std::string& directory);

// Vote fractions below this are flagged as low-confidence target labels.
inline constexpr double kLowConfidenceVote = 0.6;

}  // namespace uor
