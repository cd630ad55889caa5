#pragma once

#include "uor/common.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace uor {

struct SpecialTokens {
    std::string pad = "[PAD]";
    std::string unk = "[UNK]";
    std::string cls = "[CLS]";
    std::string sep = "[SEP]";
    std::string mask = "[MASK]";
};

/// Ordered token list with id lookup and the tokenizer conventions the rest
/// of the library needs (special tokens, subword continuation marker).
class Vocabulary {
public:
    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::string> tokens, SpecialTokens specials = {},
                        std::string continuation_prefix = "##");

    static Vocabulary load(const std::string& path);
    void save(const std::string& path) const;

    std::size_t size() const { return tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    const std::string& token(TokenId id) const;

    bool contains(std::string_view token) const;
    std::optional<TokenId> find(std::string_view token) const;
    // Throws Error naming the token when it is not in the vocabulary.
    TokenId id_of(std::string_view token) const;

    // Whitespace tokenization with strict lookup (no [UNK] fallback).
    Sentence encode_text(std::string_view text) const;
    std::string decode(const Sentence& ids) const;

    bool is_special(TokenId id) const;
    bool is_subword(std::string_view token) const;

    std::optional<TokenId> cls_id() const { return cls_; }
    std::optional<TokenId> mask_id() const { return mask_; }
    std::optional<TokenId> unk_id() const { return unk_; }
    const std::string& continuation_prefix() const { return continuation_prefix_; }

    // Stable FNV-1a hash over the ordered token list; used in checkpoint manifests.
    std::uint64_t hash() const;

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, TokenId> index_;
    std::vector<bool> special_;
    std::string continuation_prefix_ = "##";
    std::optional<TokenId> cls_, mask_, unk_;
};

std::vector<std::string> split_whitespace(std::string_view text);

}  // namespace uor
