#pragma once

#include "critset/params.hpp"
#include "critset/structure.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace critset {

/// One graph6 record, optionally prefixed with ">>graph6<<". Trailing
/// whitespace is ignored. ParseError (with the offending byte offset) on a bad
/// length prefix, a character outside 63..126, a wrong record length or
/// nonzero padding bits.
ColourStructure parse_graph6(std::string_view record);
/// graph6 encoding without header. InputError for hypergraphs.
std::string to_graph6(const ColourStructure& g);

/// {"n": int, "edges": [[int, ...], ...]}. Size-2-only edge lists still yield a
/// hypergraph unless `as_graph` is set.
ColourStructure parse_hypergraph_json(std::string_view text, bool as_graph = false);
nlohmann::json to_json(const ColourStructure& s);

/// Whitespace separated: the vertex count, then one edge per line. Lines whose
/// first token starts with '#' are comments. A structure whose edges all have
/// two vertices is a graph.
ColourStructure parse_edge_list(std::string_view text);
std::string to_edge_list(const ColourStructure& s);

/// JSON array of integers in [1..k].
Colouring parse_colouring_json(std::string_view text, int k);

enum class Format { graph6, edges, hjson };
Format parse_format(std::string_view name);
/// Reads a whole file in the given format (graph6: first non-empty line).
ColourStructure read_structure(const std::filesystem::path& path, Format format);
std::string read_file(const std::filesystem::path& path);

nlohmann::json to_json(const Colouring& c);
nlohmann::json to_json(const ParamResult& r);

/// Append-only JSON-lines store of parameter values, keyed by
/// (structure hash, parameter name, k). Each record is written with a single
/// append so concurrent writers never interleave partial lines.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path);
    /// $CRITSET_CACHE, else $XDG_CACHE_HOME/critset/cache.jsonl, else
    /// $HOME/.cache/critset/cache.jsonl.
    static std::filesystem::path default_path();

    /// Last stored result for the key, if any. Malformed lines are skipped.
    std::optional<nlohmann::json> lookup(std::uint64_t hash, std::string_view param, int k) const;
    void store(std::uint64_t hash, std::string_view param, int k, const nlohmann::json& result) const;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace critset
