#pragma once

#include "uor/analysis_viz.hpp"
#include "uor/backdoor_trainer.hpp"
#include "uor/defense.hpp"
#include "uor/downstream.hpp"
#include "uor/metrics.hpp"
#include "uor/pretrain.hpp"
#include "uor/trigger_search.hpp"

#include "json.hpp"

#include <functional>
#include <string>
#include <vector>

namespace uor {

struct ModelSpec {
    std::string identifier = "toy-encoder";
    std::string checkpoint;  // existing encoder directory; empty builds one from `encoder`
    EncoderConfig encoder;   // vocab_size comes from the vocabulary
    SummaryConvention convention = SummaryConvention::first_token;
    PretrainConfig pretrain;  // epochs = 0 skips pre-training
};

struct DataSpec {
    std::string vocab;
    std::string frequency_table;
    std::string stopwords;  // empty: built-in English list
    std::string corpus;
    std::string train;
    std::string test;
    int num_labels = 0;  // 0 infers from the training labels
    // Trailing corpus sentences kept out of every training stage.
    std::size_t heldout_sentences = 200;
    // Cap on the sentences used for backdoor training; 0 uses all.
    std::size_t backdoor_sentences = 0;
};

struct TriggerSpec {
    std::size_t n = 3;
    std::size_t search_vocab_size = 5000;
    bool use_gradient_search = true;
    std::size_t k = 10;
    std::size_t beam_width = 5;
    std::size_t iterations = 3;
    std::size_t batch_sentences = 128;
    std::size_t copies = 3;
    InsertionPolicy::Placement placement = InsertionPolicy::Placement::uniform_random;
    RepresentationTarget target;
    // Backdoor steps run with the initial triggers before searching; 0
    // searches on the clean encoder.
    std::size_t warmup_steps = 0;
};

struct ProbeSpec {
    std::size_t count = 100;
    std::size_t min_length = 5;
    std::size_t max_length = 20;
    ProbeMode mode = ProbeMode::inserted;
};

struct VisualizationSpec {
    bool enabled = true;
    std::size_t sentences = 200;
    std::size_t intermediate_dim = 20;
    UmapConfig umap;
};

struct ExperimentConfig {
    std::string output_dir;
    std::uint64_t root_seed = 0;
    ModelSpec model;
    DataSpec data;
    TriggerSpec triggers;
    TrainConfig backdoor;
    bool checkpoint_every_epoch = false;
    FinetuneConfig finetune;
    bool clean_baseline = true;
    std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4};
    ProbeSpec probes;
    std::vector<DefenseConfig> defenses;
    std::size_t calibration_sentences = 512;
    VisualizationSpec visualization;

    // Relative data paths resolve against `base_dir`. Unknown keys are rejected.
    static ExperimentConfig from_json(const nlohmann::json& j, const std::string& base_dir = "");
    nlohmann::ordered_json to_json() const;
    // Checks every referenced input path and parameter before any compute.
    void validate() const;
};

// "a.b.c=value"; the value is parsed as JSON when possible, else taken as a string.
void apply_override(nlohmann::json& config, const std::string& assignment);

ExperimentConfig load_experiment_config(const std::string& path, const std::vector<std::string>& overrides = {});

// Compute device from UOR_DEVICE; only "cpu" is available.
std::string selected_device();

enum class Stage { prepare, search_triggers, poison, train_backdoor, finetune, evaluate, defend, visualize, report };

const std::vector<Stage>& all_stages();
std::string stage_name(Stage stage);
Stage parse_stage(const std::string& name);

struct RunOptions {
    std::vector<Stage> stages;  // empty runs every stage in order
    // Clears an existing output directory whose config snapshot differs.
    bool force = false;
    // Progress messages.
    std::function<void(const std::string&)> log;
    // Called after each persisted unit of work ("finetune/backdoored/seed_0", ...).
    std::function<void(const std::string&)> on_unit_done;
};

/// Experiment directory bound to a resolved config. Each stage reads its
/// inputs from the directory and persists its outputs with a .done marker;
/// completed stages and units are skipped on rerun. A failing stage leaves a
/// .failed marker holding the error message.
class Experiment {
public:
    explicit Experiment(ExperimentConfig config, bool force = false);
    // Reopens a directory from its config snapshot.
    static Experiment open(const std::string& directory);

    const ExperimentConfig& config() const { return config_; }
    const std::string& directory() const { return dir_; }

    void run(const RunOptions& options = {});
    void run_stage(Stage stage, const RunOptions& options = {});
    bool stage_done(Stage stage) const;

    // Final mean report, available once the report stage ran.
    std::string mean_report_path() const;

private:
    struct Inputs;
    Inputs& inputs();

    void stage_prepare(const RunOptions& o);
    void stage_search(const RunOptions& o);
    void stage_poison(const RunOptions& o);
    void stage_train(const RunOptions& o);
    void stage_finetune(const RunOptions& o);
    void stage_evaluate(const RunOptions& o);
    void stage_defend(const RunOptions& o);
    void stage_visualize(const RunOptions& o);
    void stage_report(const RunOptions& o);

    void require(Stage stage) const;
    std::string path(const std::string& relative) const;

    ExperimentConfig config_;
    std::string dir_;
    std::shared_ptr<Inputs> inputs_;
};

// Runs every stage; returns the experiment directory.
std::string run_pipeline(const ExperimentConfig& config, const RunOptions& options = {});

nlohmann::ordered_json to_json(const TargetLabelMap& map, const std::vector<std::string>& tokens);
TargetLabelMap target_label_map_from_json(const nlohmann::json& j);

}  // namespace uor
