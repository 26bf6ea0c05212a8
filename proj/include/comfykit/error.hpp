#pragma once

#include <stdexcept>
#include <string>

namespace comfykit {

enum class errc {
    // wire format / graph structure
    json_parse,
    node_key,
    link_shape,
    unsupported_literal,
    duplicate_node_key,
    cycle,
    invalid_graph,
    // code grammar
    code_syntax,
    positional_argument,
    nested_call,
    unbound_variable,
    duplicate_binding,
    duplicate_node_id,
    target_count,
    // registry
    doc_parse,
    duplicate_class,
    class_not_found,
    unknown_class,
    kind_mismatch,
    // knowledge store / embeddings
    annotation_missing,
    corpus_invalid,
    dimension_mismatch,
    zero_vector,
    // providers
    provider_unavailable,
    auth_failed,
    context_length,
    retries_exhausted,
    replay_miss,
    // tagged responses
    tag_missing,
    unterminated_tag,
    judgment_value,
    // bench harness
    bad_manifest,
    missing_asset,
    undecodable_media,
    length_mismatch,
    constant_input,
    // plumbing
    io,
    config,
    contract,
};

const char* errc_name(errc code);

/// Library-wide exception; `code()` distinguishes the failure class so
/// callers can branch without string matching.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::json_parse: return "json-parse";
        case errc::node_key: return "node-key";
        case errc::link_shape: return "link-shape";
        case errc::unsupported_literal: return "unsupported-literal";
        case errc::duplicate_node_key: return "duplicate-node-key";
        case errc::cycle: return "cycle";
        case errc::invalid_graph: return "invalid-graph";
        case errc::code_syntax: return "code-syntax";
        case errc::positional_argument: return "positional-argument";
        case errc::nested_call: return "nested-call";
        case errc::unbound_variable: return "unbound-variable";
        case errc::duplicate_binding: return "duplicate-binding";
        case errc::duplicate_node_id: return "duplicate-node-id";
        case errc::target_count: return "target-count";
        case errc::doc_parse: return "doc-parse";
        case errc::duplicate_class: return "duplicate-class";
        case errc::class_not_found: return "class-not-found";
        case errc::unknown_class: return "unknown-class";
        case errc::kind_mismatch: return "kind-mismatch";
        case errc::annotation_missing: return "annotation-missing";
        case errc::corpus_invalid: return "corpus-invalid";
        case errc::dimension_mismatch: return "dimension-mismatch";
        case errc::zero_vector: return "zero-vector";
        case errc::provider_unavailable: return "provider-unavailable";
        case errc::auth_failed: return "auth-failed";
        case errc::context_length: return "context-length";
        case errc::retries_exhausted: return "retries-exhausted";
        case errc::replay_miss: return "replay-miss";
        case errc::tag_missing: return "tag-missing";
        case errc::unterminated_tag: return "unterminated-tag";
        case errc::judgment_value: return "judgment-value";
        case errc::bad_manifest: return "bad-manifest";
        case errc::missing_asset: return "missing-asset";
        case errc::undecodable_media: return "undecodable-media";
        case errc::length_mismatch: return "length-mismatch";
        case errc::constant_input: return "constant-input";
        case errc::io: return "io";
        case errc::config: return "config";
        case errc::contract: return "contract";
    }
    return "unknown";
}

}  // namespace comfykit
