#include "critset/error.hpp"
#include "critset/params.hpp"
#include "search_state.hpp"

namespace critset {

using detail::SearchState;

// One DFS level: the state after vertices [0, index) are coloured, the largest
// colour used so far, and the next colour to try at `index`.
struct CanonicalColouringStream::Frame {
    SearchState state;
    Vertex index;
    Colour max_used;
    Colour next;
};

CanonicalColouringStream::CanonicalColouringStream(const ColourStructure& s, int k) : s_(&s), k_(k) {
    if (k < 1)
        return;
    SearchState root(s, k);
    if (root.propagate())
        stack_.push_back(Frame{std::move(root), 0, 0, 1});
}

CanonicalColouringStream::~CanonicalColouringStream() = default;
CanonicalColouringStream::CanonicalColouringStream(CanonicalColouringStream&&) noexcept = default;
CanonicalColouringStream& CanonicalColouringStream::operator=(CanonicalColouringStream&&) noexcept = default;

std::optional<Colouring> CanonicalColouringStream::next() {
    const int n = s_->order();
    while (!stack_.empty()) {
        Frame& top = stack_.back();
        if (top.index == n) {
            Colouring out = top.state.to_colouring();
            stack_.pop_back();
            return out;
        }
        const Vertex v = top.index;
        if (top.state.assigned(v)) {
            // Forced by propagation: the prefix decides the colour, keep it only
            // if it respects first-use order.
            Colour c = top.state.colour(v);
            if (c > top.max_used + 1) {
                stack_.pop_back();
            } else {
                top.max_used = std::max(top.max_used, c);
                ++top.index;
            }
            continue;
        }
        const Colour limit = std::min(k_, top.max_used + 1);
        Colour c = top.next;
        while (c <= limit && !(top.state.domain(v) & detail::bit(c)))
            ++c;
        if (c > limit) {
            stack_.pop_back();
            continue;
        }
        top.next = c + 1;
        SearchState child = top.state;
        const Colour max_used = std::max(top.max_used, c);
        if (child.set(v, c) && child.propagate())
            stack_.push_back(Frame{std::move(child), v + 1, max_used, 1});
    }
    return std::nullopt;
}

CanonicalColouringStream enumerate_colourings(const ColourStructure& s, int k) {
    return CanonicalColouringStream(s, k);
}

std::vector<Colouring> all_canonical_colourings(const ColourStructure& s, int k, std::size_t limit) {
    std::vector<Colouring> out;
    auto stream = enumerate_colourings(s, k);
    while (auto c = stream.next()) {
        if (out.size() == limit)
            throw InputError("more than " + std::to_string(limit) + " colourings to enumerate");
        out.push_back(std::move(*c));
    }
    return out;
}

int chromatic_number(const ColourStructure& s) {
    if (s.order() < 1)
        throw InputError("chromatic number needs at least one vertex");
    for (int k = 1; k <= s.order(); ++k)
        if (enumerate_colourings(s, k).next())
            return k;
    return s.order();  // unreachable: n colours always suffice
}

}  // namespace critset
