#include "critset/io.hpp"

#include "critset/error.hpp"

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fcntl.h>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace critset {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int g6_byte(std::string_view text, std::size_t pos, std::size_t base) {
    if (pos >= text.size())
        throw ParseError("graph6 record truncated", base + pos);
    const auto b = static_cast<unsigned char>(text[pos]);
    if (b < 63 || b > 126)
        throw ParseError("graph6 byte out of range 63..126", base + pos);
    return b - 63;
}

}  // namespace

ColourStructure parse_graph6(std::string_view record) {
    std::size_t base = 0;
    if (record.substr(0, kGraph6Header.size()) == kGraph6Header) {
        record.remove_prefix(kGraph6Header.size());
        base = kGraph6Header.size();
    }
    while (!record.empty() && std::isspace(static_cast<unsigned char>(record.back())))
        record.remove_suffix(1);
    if (record.empty())
        throw ParseError("empty graph6 record", base);

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (static_cast<unsigned char>(record[0]) != 126) {
        n = g6_byte(record, 0, base);
        pos = 1;
    } else {
        int width = 3;
        pos = 1;
        if (record.size() > 1 && static_cast<unsigned char>(record[1]) == 126) {
            width = 6;
            pos = 2;
        }
        for (int i = 0; i < width; ++i, ++pos)
            n = (n << 6) | static_cast<std::uint64_t>(g6_byte(record, pos, base));
    }
    if (n > 1'000'000)
        throw ParseError("graph6 order too large", base);

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (record.size() - pos != bytes)
        throw ParseError("graph6 record has " + std::to_string(record.size() - pos) + " data bytes, expected " +
                             std::to_string(bytes),
                         base + std::min<std::size_t>(record.size(), pos + bytes));

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::uint64_t bit = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++bit) {
            const std::size_t at = pos + bit / 6;
            const int value = g6_byte(record, at, base);
            if (value >> (5 - bit % 6) & 1)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    for (; bit < bytes * 6; ++bit) {
        const std::size_t at = pos + bit / 6;
        if (g6_byte(record, at, base) >> (5 - bit % 6) & 1)
            throw ParseError("graph6 padding bits must be zero", base + at);
    }
    return ColourStructure::graph(static_cast<int>(n), edges);
}

std::string to_graph6(const ColourStructure& g) {
    if (!g.is_graph())
        throw InputError("graph6 encodes graphs only");
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, used = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            acc = acc << 1 | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    if (used > 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

ColourStructure parse_hypergraph_json(std::string_view text, bool as_graph) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw InputError("hypergraph JSON needs an object with fields \"n\" and \"edges\"");
    const auto& jn = doc["n"];
    if (!jn.is_number_integer() || jn.get<long long>() < 0 || jn.get<long long>() > 1'000'000)
        throw InputError("\"n\" must be a non-negative integer");
    if (!doc["edges"].is_array())
        throw InputError("\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const auto& je : doc["edges"]) {
        if (!je.is_array())
            throw InputError("each edge must be an array of vertices");
        Edge e;
        for (const auto& jv : je) {
            if (!jv.is_number_integer())
                throw InputError("edge entries must be integers");
            const long long v = jv.get<long long>();
            if (v < 0 || v > 1'000'000)
                throw InputError("vertex " + std::to_string(v) + " out of range");
            e.push_back(static_cast<Vertex>(v));
        }
        edges.push_back(std::move(e));
    }
    const int n = jn.get<int>();
    return as_graph ? ColourStructure::graph(n, std::move(edges)) : ColourStructure::hypergraph(n, std::move(edges));
}

nlohmann::json to_json(const ColourStructure& s) {
    return {{"n", s.order()}, {"edges", s.edges()}};
}

ColourStructure parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<int> n;
    std::vector<Edge> edges;
    bool all_pairs = true;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string tok;
        std::vector<long long> values;
        while (tokens >> tok) {
            if (tok[0] == '#')
                break;
            char* end = nullptr;
            errno = 0;
            const long long v = std::strtoll(tok.c_str(), &end, 10);
            if (*end != '\0' || errno != 0 || v < 0 || v > 1'000'000)
                throw InputError("edge list: bad token '" + tok + "'");
            values.push_back(v);
        }
        if (values.empty())
            continue;
        if (!n) {
            if (values.size() != 1)
                throw InputError("edge list must start with the vertex count on its own line");
            n = static_cast<int>(values[0]);
            continue;
        }
        Edge e(values.begin(), values.end());
        all_pairs = all_pairs && e.size() == 2;
        edges.push_back(std::move(e));
    }
    if (!n)
        throw InputError("edge list is empty");
    return all_pairs ? ColourStructure::graph(*n, std::move(edges))
                     : ColourStructure::hypergraph(*n, std::move(edges));
}

std::string to_edge_list(const ColourStructure& s) {
    std::string out = std::to_string(s.order()) + "\n";
    for (const auto& e : s.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out += (i ? " " : "") + std::to_string(e[i]);
        out += "\n";
    }
    return out;
}

Colouring parse_colouring_json(std::string_view text, int k) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!doc.is_array())
        throw InputError("colouring must be a JSON array");
    std::vector<Colour> colours;
    for (const auto& v : doc) {
        if (!v.is_number_integer())
            throw InputError("colours must be integers");
        const long long c = v.get<long long>();
        if (c < 1 || c > k)
            throw InputError("colour " + std::to_string(c) + " outside [1.." + std::to_string(k) + "]");
        colours.push_back(static_cast<Colour>(c));
    }
    return Colouring(std::move(colours), k);
}

Format parse_format(std::string_view name) {
    if (name == "graph6")
        return Format::graph6;
    if (name == "edges")
        return Format::edges;
    if (name == "hjson")
        return Format::hjson;
    throw InputError("unknown format '" + std::string(name) + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ColourStructure read_structure(const std::filesystem::path& path, Format format) {
    const std::string text = read_file(path);
    switch (format) {
    case Format::graph6: {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return parse_graph6(line);
        throw ParseError("no graph6 record in '" + path.string() + "'", 0);
    }
    case Format::edges:
        return parse_edge_list(text);
    case Format::hjson:
        return parse_hypergraph_json(text);
    }
    throw InputError("unknown format");
}

nlohmann::json to_json(const Colouring& c) { return c.colours(); }

nlohmann::json to_json(const ParamResult& r) {
    nlohmann::json out{{"value", r.value}, {"nodes_explored", r.nodes_explored}};
    out["witness_colouring"] = r.witness_colouring ? to_json(*r.witness_colouring) : nlohmann::json(nullptr);
    out["witness_set"] = r.witness_set ? nlohmann::json(*r.witness_set) : nlohmann::json(nullptr);
    return out;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

std::filesystem::path ResultCache::default_path() {
    if (const char* p = std::getenv("CRITSET_CACHE"); p && *p)
        return p;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
        return std::filesystem::path(x) / "critset" / "cache.jsonl";
    if (const char* h = std::getenv("HOME"); h && *h)
        return std::filesystem::path(h) / ".cache" / "critset" / "cache.jsonl";
    return std::filesystem::temp_directory_path() / "critset-cache.jsonl";
}

namespace {

std::string cache_key(std::uint64_t hash, std::string_view param, int k) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(hex) + ":" + std::string(param) + ":" + std::to_string(k);
}

}  // namespace

std::optional<nlohmann::json> ResultCache::lookup(std::uint64_t hash, std::string_view param, int k) const {
    std::ifstream in(path_);
    if (!in)
        return std::nullopt;
    const std::string key = cache_key(hash, param, k);
    std::optional<nlohmann::json> found;
    std::string line;
    while (std::getline(in, line)) {
        auto rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object() || !rec.contains("key") || !rec.contains("result"))
            continue;
        if (rec["key"] == key)
            found = rec["result"];
    }
    return found;
}

void ResultCache::store(std::uint64_t hash, std::string_view param, int k, const nlohmann::json& result) const {
    std::error_code ec;
    if (path_.has_parent_path())
        std::filesystem::create_directories(path_.parent_path(), ec);
    const std::string line = nlohmann::json{{"key", cache_key(hash, param, k)}, {"result", result}}.dump() + "\n";
    const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0)
        throw InputError("cannot open cache '" + path_.string() + "': " + std::strerror(errno));
    const ssize_t written = ::write(fd, line.data(), line.size());
    ::close(fd);
    if (written != static_cast<ssize_t>(line.size()))
        throw InputError("short write to cache '" + path_.string() + "'");
}

}  // namespace critset
