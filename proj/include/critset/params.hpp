#pragma once

#include "critset/exec.hpp"
#include "critset/structure.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace critset {

namespace detail {
class SearchState;
}

/// Value of a parameter plus a witness and search statistics.
/// For sn the witness colouring is the unique extension of the witness set;
/// for scs/lcs it is the input colouring; for oscs/ulcs/olcs it is a colouring
/// attaining the optimum and the witness set is an optimal critical set of it.
struct ParamResult {
    int value = 0;
    std::optional<Colouring> witness_colouring;
    std::optional<VertexSet> witness_set;
    std::uint64_t nodes_explored = 0;
};

enum class Param { sn, oscs, ulcs, olcs };
std::string_view to_string(Param p);
/// Parses "sn", "oscs", "ulcs", "olcs"; InputError otherwise.
Param parse_param(std::string_view name);

/// One representative per colour-permutation class of proper k-colourings:
/// the one whose colours first appear in increasing order along the vertex
/// indices. Deterministic, lexicographic order.
class CanonicalColouringStream {
public:
    CanonicalColouringStream(const ColourStructure& s, int k);
    ~CanonicalColouringStream();
    CanonicalColouringStream(CanonicalColouringStream&&) noexcept;
    CanonicalColouringStream& operator=(CanonicalColouringStream&&) noexcept;

    std::optional<Colouring> next();
    const ColourStructure& structure() const { return *s_; }
    int k() const { return k_; }

private:
    struct Frame;
    const ColourStructure* s_;
    int k_;
    std::vector<Frame> stack_;
};

CanonicalColouringStream enumerate_colourings(const ColourStructure& s, int k);
/// Drains the stream; InputError if more than `limit` colourings exist.
std::vector<Colouring> all_canonical_colourings(const ColourStructure& s, int k,
                                                std::size_t limit = std::size_t{1} << 24);

/// Least k with a proper k-colouring. Requires n >= 1.
int chromatic_number(const ColourStructure& s);

/// Smallest determining set of (s, c) with k colours available. The witness is
/// the lexicographically smallest optimum. InputError if c is improper or uses
/// a colour above k.
ParamResult scs(const ColourStructure& s, const Colouring& c, int k, const SolveOptions& opt = {});
/// Largest critical set of (s, c); lexicographically smallest witness.
ParamResult lcs(const ColourStructure& s, const Colouring& c, int k, const SolveOptions& opt = {});

/// Fewest precoloured vertices with a unique proper k-extension. Witness is the
/// first success in (size, subset-lex, canonical-assignment-lex) order (per
/// component when components are split). InfeasibleError if k < chi.
ParamResult sn(const ColourStructure& s, int k, const SolveOptions& opt = {});
/// max over k-colourings of scs.
ParamResult oscs(const ColourStructure& s, int k, const SolveOptions& opt = {});
/// min over k-colourings of lcs.
ParamResult ulcs(const ColourStructure& s, int k, const SolveOptions& opt = {});
/// max over k-colourings of lcs.
ParamResult olcs(const ColourStructure& s, int k, const SolveOptions& opt = {});

ParamResult compute(Param p, const ColourStructure& s, int k, const SolveOptions& opt = {});

/// Size of a smallest independent set whose removal lowers the chromatic
/// number. Graphs only.
int ivs_chi(const ColourStructure& g);

}  // namespace critset
