#pragma once

#include "uor/common.hpp"
#include "uor/rng.hpp"
#include "uor/vocabulary.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace uor {

struct EncoderConfig {
    std::size_t vocab_size = 0;
    std::size_t hidden_dim = 64;
    std::size_t num_layers = 2;
    std::size_t num_heads = 4;
    std::size_t ffn_dim = 256;
    std::size_t max_positions = 64;
    double init_std = 0.02;
    double layer_norm_eps = 1e-5;

    void validate() const;
};

// Biases and layer-norm parameters are stored as 1xN matrices so every
// parameter can be visited uniformly.
struct LayerWeights {
    Matrix wq, bq, wk, bk, wv, bv, wo, bo;
    Matrix ln1_gamma, ln1_beta;
    Matrix w1, b1, w2, b2;
    Matrix ln2_gamma, ln2_beta;
};

struct EncoderWeights {
    Matrix token_embedding;     // vocab x hidden
    Matrix position_embedding;  // max_positions x hidden
    Matrix emb_ln_gamma, emb_ln_beta;
    std::vector<LayerWeights> layers;

    // Same shapes, all zeros. Used as a gradient accumulator.
    EncoderWeights zeros_like() const;
    void set_zero();
};

template <typename LayerT, typename Fn>
void for_each_layer_parameter(LayerT& l, const std::string& prefix, Fn&& fn) {
    fn(prefix + "attention.query.weight", l.wq);
    fn(prefix + "attention.query.bias", l.bq);
    fn(prefix + "attention.key.weight", l.wk);
    fn(prefix + "attention.key.bias", l.bk);
    fn(prefix + "attention.value.weight", l.wv);
    fn(prefix + "attention.value.bias", l.bv);
    fn(prefix + "attention.output.weight", l.wo);
    fn(prefix + "attention.output.bias", l.bo);
    fn(prefix + "attention_norm.gamma", l.ln1_gamma);
    fn(prefix + "attention_norm.beta", l.ln1_beta);
    fn(prefix + "ffn.in.weight", l.w1);
    fn(prefix + "ffn.in.bias", l.b1);
    fn(prefix + "ffn.out.weight", l.w2);
    fn(prefix + "ffn.out.bias", l.b2);
    fn(prefix + "ffn_norm.gamma", l.ln2_gamma);
    fn(prefix + "ffn_norm.beta", l.ln2_beta);
}

// Visits (name, matrix) for every trainable parameter in a fixed order.
template <typename WeightsT, typename Fn>
void for_each_parameter(WeightsT& w, Fn&& fn) {
    fn(std::string("embeddings.token"), w.token_embedding);
    fn(std::string("embeddings.position"), w.position_embedding);
    fn(std::string("embeddings.norm.gamma"), w.emb_ln_gamma);
    fn(std::string("embeddings.norm.beta"), w.emb_ln_beta);
    for (std::size_t i = 0; i < w.layers.size(); ++i)
        for_each_layer_parameter(w.layers[i], "layer" + std::to_string(i) + ".", fn);
}

struct LayerNormCache {
    Matrix normalized;
    Vector inv_std;
};

/// Post-norm transformer encoder stack (BERT layout) with an explicit
/// backward pass. Sequences in a batch are concatenated row-wise; attention
/// is restricted to each sequence's own block, so no padding is involved.
class TransformerEncoder {
public:
    struct LayerCache {
        Matrix input, q, k, v, context;
        std::vector<Matrix> probs;  // [sequence * heads + head]
        LayerNormCache ln1;
        Matrix attn_norm_out;
        Matrix ffn_pre;   // before activation
        Matrix ffn_act;   // after activation, before the pruning mask
        LayerNormCache ln2;
    };

    struct Cache {
        std::vector<std::size_t> offsets;
        std::vector<std::size_t> lengths;
        std::vector<TokenId> ids;
        std::vector<std::size_t> positions;
        LayerNormCache emb_ln;
        std::vector<LayerCache> layers;
    };

    TransformerEncoder() = default;
    TransformerEncoder(EncoderConfig config, std::uint64_t seed);

    const EncoderConfig& config() const { return config_; }
    EncoderWeights& weights() { return weights_; }
    const EncoderWeights& weights() const { return weights_; }

    // 1 x ffn_dim masks; zero entries silence feed-forward hidden units.
    std::vector<Matrix>& ffn_masks() { return ffn_masks_; }
    const std::vector<Matrix>& ffn_masks() const { return ffn_masks_; }

    // Re-draws one layer's parameters from the initializer.
    void initialize_layer(std::size_t layer, Rng& rng);

    // Returns the final hidden states, one row per input token.
    Matrix forward(std::span<const Sentence> inputs, Cache* cache = nullptr) const;

    // Accumulates parameter gradients into `grads`. When `d_embedding_input`
    // is non-null it receives dLoss/d(token_embedding + position_embedding)
    // per input row.
    void backward(const Cache& cache, const Matrix& d_hidden, EncoderWeights& grads,
                  Matrix* d_embedding_input = nullptr) const;

private:
    EncoderConfig config_;
    EncoderWeights weights_;
    std::vector<Matrix> ffn_masks_;
};

/// Where the representation of a sequence is read from.
struct RepresentationTarget {
    enum class Mode { sequence_summary, token_position };
    Mode mode = Mode::sequence_summary;
    std::size_t position = 0;

    static RepresentationTarget summary() { return {}; }
    static RepresentationTarget token(std::size_t p) { return {Mode::token_position, p}; }
    std::string to_string() const;
    static RepresentationTarget parse(const std::string& text);
};

struct RepresentationBatch {
    Matrix vectors;               // batch x hidden
    std::vector<int> class_tags;  // 0 = clean, i = poisoned with trigger i

    std::size_t size() const { return static_cast<std::size_t>(vectors.rows()); }
    void validate() const;
};

// Summary position convention of an architecture: BERT-style encoders put
// the summary token first, XLNet-style ones last.
enum class SummaryConvention { first_token, last_token };

class EncoderHandle {
public:
    EncoderHandle() = default;
    EncoderHandle(std::string identifier, std::shared_ptr<const Vocabulary> vocab,
                  EncoderConfig config, std::uint64_t seed,
                  SummaryConvention convention = SummaryConvention::first_token);

    const std::string& identifier() const { return identifier_; }
    std::size_t hidden_dim() const { return model_.config().hidden_dim; }
    std::size_t embed_dim() const { return model_.config().hidden_dim; }
    const Vocabulary& vocab() const { return *vocab_; }
    std::shared_ptr<const Vocabulary> shared_vocab() const { return vocab_; }
    const Matrix& embedding_table() const { return model_.weights().token_embedding; }
    bool trainable() const { return trainable_; }
    SummaryConvention convention() const { return convention_; }

    TransformerEncoder& model();
    const TransformerEncoder& model() const { return model_; }

    // Deep copy that refuses mutation through model().
    EncoderHandle clone_frozen() const;
    // Deep copy that may be trained.
    EncoderHandle trainable_copy() const;

    // Caller tokens wrapped with the architecture's summary token.
    Sentence model_input(const Sentence& tokens) const;
    // Row of model_input(tokens) that `target` reads.
    std::size_t target_row(const Sentence& tokens, const RepresentationTarget& target) const;

    void save(const std::string& directory) const;
    static EncoderHandle load(const std::string& directory);

private:
    std::string identifier_;
    std::shared_ptr<const Vocabulary> vocab_;
    TransformerEncoder model_;
    bool trainable_ = true;
    SummaryConvention convention_ = SummaryConvention::first_token;
};

RepresentationBatch encode(const EncoderHandle& handle, std::span<const Sentence> sequences,
                           const RepresentationTarget& target);

/// Forward pass retained for backpropagation from representation gradients.
struct EncodedBatch {
    TransformerEncoder::Cache cache;
    std::vector<std::size_t> rows;  // global row of each sequence's representation
    Matrix vectors;
};

EncodedBatch encode_for_training(const EncoderHandle& handle, std::span<const Sentence> sequences,
                                 std::span<const RepresentationTarget> targets);
EncodedBatch encode_for_training(const EncoderHandle& handle, std::span<const Sentence> sequences,
                                 const RepresentationTarget& target);

void backpropagate(const EncoderHandle& handle, const EncodedBatch& batch, const Matrix& d_vectors,
                   EncoderWeights& grads, Matrix* d_embedding_input = nullptr);

// Loss over a representation batch together with dLoss/dvectors.
using RepresentationLoss = std::function<std::pair<double, Matrix>(const RepresentationBatch&)>;

/// Gradient of `loss` with respect to each trigger's embedding row, summed
/// over every occurrence of the trigger in `sequences`.
std::vector<Vector> embedding_gradient(const EncoderHandle& handle,
                                       std::span<const Sentence> sequences,
                                       const RepresentationTarget& target,
                                       const RepresentationLoss& loss,
                                       std::span<const TokenId> triggers,
                                       std::span<const int> class_tags = {});

}  // namespace uor
