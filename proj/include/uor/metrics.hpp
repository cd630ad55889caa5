#pragma once

#include "uor/downstream.hpp"

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace uor {

struct PredictionLog {
    std::vector<std::vector<int>> per_trigger;  // predictions on each poisoned test set
    std::vector<std::pair<int, int>> clean;     // (predicted, true) on the clean test set
    TargetLabelMap target_map;
    int num_labels = 2;

    void validate() const;
};

struct LabelAsr {
    double value = 0.0;
    std::vector<double> per_label;
};

// Fraction of each poisoned set predicted as the trigger's target label.
std::vector<double> asr_per_trigger(const PredictionLog& log);
double t_asr(const std::vector<double>& asrs);
// Best trigger per label, 0 for labels no trigger targets, averaged over labels.
LabelAsr l_asr(const std::vector<double>& asrs, const TargetLabelMap& target_map, int num_labels);
// Share of labels whose best ASR reaches the coverage threshold (inclusive).
double alc(const std::vector<double>& per_label);
double acc(const std::vector<std::pair<int, int>>& clean_pairs);

inline constexpr double kLabelCoverageThreshold = 0.75;

struct MetricSummary {
    double t_asr = 0.0;
    double l_asr = 0.0;
    double alc = 0.0;
    double acc = 0.0;
};

struct DefenseOutcome {
    std::string name;
    MetricSummary before;
    MetricSummary after;
};

struct AttackReport {
    std::vector<double> asr_per_trigger;
    double t_asr = 0.0;
    double l_asr = 0.0;
    double alc = 0.0;
    double acc = 0.0;
    std::vector<double> per_label_asr;
    std::vector<int> target_labels;
    std::vector<double> vote_fractions;
    std::vector<std::string> flags;
    std::vector<DefenseOutcome> defenses;

    MetricSummary summary() const { return {t_asr, l_asr, alc, acc}; }
};

AttackReport evaluate_attack(const PredictionLog& log);

// Element-wise mean over per-seed reports; flags are unioned in order.
AttackReport mean_report(const std::vector<AttackReport>& reports);

nlohmann::ordered_json to_json(const MetricSummary& s);
nlohmann::ordered_json to_json(const AttackReport& report);
AttackReport attack_report_from_json(const nlohmann::json& j);

}  // namespace uor
