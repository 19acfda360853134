#include "tsplit/digraph.hpp"

#include "tsplit/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tsplit {

namespace {

void require_same_owner(const Digraph& d, const VertexSet& x) {
    if (x.owner_n() != d.n())
        throw DimensionError("vertex set indexes " + std::to_string(x.owner_n()) +
                             " vertices but the digraph has " + std::to_string(d.n()));
}

void require_vertex(std::size_t n, Vertex v) {
    if (v >= n)
        throw DomainError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
}

auto and_popcount(std::span<const Word> a, std::span<const Word> b) -> Degree {
    Degree count = 0;
    for (std::size_t w = 0; w < a.size(); ++w)
        count += static_cast<Degree>(std::popcount(a[w] & b[w]));
    return count;
}

} // namespace

// VertexSet

VertexSet::VertexSet(std::size_t owner_n) : _owner_n(owner_n), _bits(words_for(owner_n), 0) {}

VertexSet::VertexSet(std::size_t owner_n, std::initializer_list<Vertex> ids)
    : VertexSet(owner_n, std::span<const Vertex>(ids.begin(), ids.size())) {}

VertexSet::VertexSet(std::size_t owner_n, std::span<const Vertex> ids) : VertexSet(owner_n) {
    for (Vertex v : ids)
        insert(v);
}

auto VertexSet::full(std::size_t owner_n) -> VertexSet {
    VertexSet x(owner_n);
    std::fill(x._bits.begin(), x._bits.end(), ~Word{0});
    if (auto tail = owner_n % bits_per_word; tail != 0)
        x._bits.back() = (Word{1} << tail) - 1;
    return x;
}

auto VertexSet::from_mask(std::size_t owner_n, Word mask) -> VertexSet {
    if (owner_n > bits_per_word)
        throw DomainError("from_mask needs owner_n <= 64");
    if (owner_n < bits_per_word && (mask >> owner_n) != 0)
        throw DomainError("mask has bits beyond owner_n");
    VertexSet x(owner_n);
    if (owner_n > 0)
        x._bits[0] = mask;
    return x;
}

auto VertexSet::size() const -> std::size_t {
    std::size_t count = 0;
    for (Word w : _bits)
        count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

auto VertexSet::empty() const -> bool {
    return std::all_of(_bits.begin(), _bits.end(), [](Word w) { return w == 0; });
}

auto VertexSet::contains(Vertex v) const -> bool {
    return v < _owner_n && ((_bits[v / bits_per_word] >> (v % bits_per_word)) & 1U);
}

void VertexSet::insert(Vertex v) {
    require_vertex(_owner_n, v);
    _bits[v / bits_per_word] |= Word{1} << (v % bits_per_word);
}

void VertexSet::erase(Vertex v) {
    require_vertex(_owner_n, v);
    _bits[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word));
}

auto VertexSet::to_mask() const -> Word {
    if (_owner_n > bits_per_word)
        throw DomainError("to_mask needs owner_n <= 64");
    return _bits.empty() ? 0 : _bits[0];
}

auto VertexSet::ids() const -> std::vector<Vertex> {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

auto VertexSet::operator|(const VertexSet& other) const -> VertexSet {
    if (other._owner_n != _owner_n)
        throw DimensionError("union of sets over different vertex ranges");
    VertexSet r = *this;
    for (std::size_t w = 0; w < _bits.size(); ++w)
        r._bits[w] |= other._bits[w];
    return r;
}

auto VertexSet::operator&(const VertexSet& other) const -> VertexSet {
    if (other._owner_n != _owner_n)
        throw DimensionError("intersection of sets over different vertex ranges");
    VertexSet r = *this;
    for (std::size_t w = 0; w < _bits.size(); ++w)
        r._bits[w] &= other._bits[w];
    return r;
}

auto VertexSet::complement() const -> VertexSet {
    VertexSet r = full(_owner_n);
    for (std::size_t w = 0; w < _bits.size(); ++w)
        r._bits[w] &= ~_bits[w];
    return r;
}

auto lex_less(const VertexSet& a, const VertexSet& b) -> bool {
    auto wa = a.words();
    auto wb = b.words();
    const std::size_t words = std::max(wa.size(), wb.size());
    auto at = [](std::span<const Word> s, std::size_t w) { return w < s.size() ? s[w] : Word{0}; };

    for (std::size_t w = 0; w < words; ++w) {
        const Word diff = at(wa, w) ^ at(wb, w);
        if (diff == 0)
            continue;
        const int bit = std::countr_zero(diff);
        const bool in_a = (at(wa, w) >> bit) & 1U;
        // Whether the set lacking the first differing id still has a larger
        // member; if not, it is a proper prefix of the other and sorts first.
        const auto& other = in_a ? wb : wa;
        const Word above = bit == 63 ? 0 : (at(other, w) >> (bit + 1));
        bool other_continues = above != 0;
        for (std::size_t v = w + 1; !other_continues && v < words; ++v)
            other_continues = at(other, v) != 0;
        return in_a == other_continues;
    }
    return false;
}

auto to_string(const VertexSet& x) -> std::string {
    std::string out = "{";
    bool first = true;
    x.for_each([&](Vertex v) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

// Digraph

Digraph::Digraph(std::size_t n)
    : _n(n), _words_per_row(words_for(n)), _bits(n * words_for(n), 0) {}

void Digraph::add_arc(Vertex u, Vertex v) {
    require_vertex(_n, u);
    require_vertex(_n, v);
    if (u == v)
        throw DomainError("loop at vertex " + std::to_string(u));
    _bits[u * _words_per_row + v / bits_per_word] |= Word{1} << (v % bits_per_word);
}

void Digraph::remove_arc(Vertex u, Vertex v) {
    require_vertex(_n, u);
    require_vertex(_n, v);
    _bits[u * _words_per_row + v / bits_per_word] &= ~(Word{1} << (v % bits_per_word));
}

void Digraph::add_arcs_to_range(Vertex u, Vertex lo, Vertex hi) {
    require_vertex(_n, u);
    if (lo > hi || hi > _n)
        throw DomainError("bad column range");
    if (u >= lo && u < hi)
        throw DomainError("range would add a loop at vertex " + std::to_string(u));
    Word* row = _bits.data() + u * _words_per_row;
    for (std::size_t v = lo; v < hi;) {
        const std::size_t w = v / bits_per_word;
        const std::size_t bit = v % bits_per_word;
        const std::size_t take = std::min<std::size_t>(bits_per_word - bit, hi - v);
        const Word mask = take == bits_per_word ? ~Word{0} : ((Word{1} << take) - 1) << bit;
        row[w] |= mask;
        v += take;
    }
}

void Digraph::or_into_row(Vertex u, std::size_t offset, std::span<const Word> src, std::size_t len) {
    require_vertex(_n, u);
    if (offset + len > _n || words_for(len) > src.size())
        throw DomainError("row copy out of range");
    if (len == 0)
        return;
    Word* row = _bits.data() + u * _words_per_row;
    const std::size_t shift = offset % bits_per_word;
    const std::size_t base = offset / bits_per_word;
    for (std::size_t w = 0; w < words_for(len); ++w) {
        Word chunk = src[w];
        if (auto tail = len - w * bits_per_word; tail < bits_per_word)
            chunk &= (Word{1} << tail) - 1;
        if (chunk == 0)
            continue;
        row[base + w] |= chunk << shift;
        if (shift != 0 && base + w + 1 < _words_per_row)
            row[base + w + 1] |= chunk >> (bits_per_word - shift);
    }
    if ((row[u / bits_per_word] >> (u % bits_per_word)) & 1U)
        throw DomainError("row copy would add a loop at vertex " + std::to_string(u));
}

auto Digraph::out_degree(Vertex u) const -> Degree {
    require_vertex(_n, u);
    Degree count = 0;
    for (Word w : row(u))
        count += static_cast<Degree>(std::popcount(w));
    return count;
}

auto Digraph::in_degree(Vertex v) const -> Degree {
    require_vertex(_n, v);
    Degree count = 0;
    for (Vertex u = 0; u < _n; ++u)
        count += has_arc(u, v) ? 1 : 0;
    return count;
}

auto Digraph::arc_count() const -> std::size_t {
    std::size_t count = 0;
    for (Word w : _bits)
        count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

// Queries

auto out_degree_in(const Digraph& d, const VertexSet& x, Vertex v) -> Degree {
    require_same_owner(d, x);
    if (!x.contains(v))
        throw DomainError("vertex " + std::to_string(v) + " is not in the set");
    return and_popcount(d.row(v), x.words());
}

auto min_out_degree(const Digraph& d, const VertexSet& x) -> Degree {
    require_same_owner(d, x);
    if (x.empty())
        return 0;
    Degree best = std::numeric_limits<Degree>::max();
    const auto xw = x.words();
    x.for_each([&](Vertex v) { best = std::min(best, and_popcount(d.row(v), xw)); });
    return best;
}

auto min_out_degree(const Digraph& d) -> Degree {
    return min_out_degree(d, VertexSet::full(d.n()));
}

auto induced(const Digraph& d, const VertexSet& x) -> Digraph {
    require_same_owner(d, x);
    const auto ids = x.ids();
    Digraph out(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = 0; j < ids.size(); ++j)
            if (i != j && d.has_arc(ids[i], ids[j]))
                out.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

auto is_tournament(const Digraph& d) -> bool {
    for (Vertex u = 0; u < d.n(); ++u) {
        if (d.has_arc(u, u))
            return false;
        for (Vertex v = u + 1; v < d.n(); ++v)
            if (d.has_arc(u, v) == d.has_arc(v, u))
                return false;
    }
    return true;
}

auto delete_vertex(const Digraph& d, Vertex v) -> Digraph {
    require_vertex(d.n(), v);
    auto keep = VertexSet::full(d.n());
    keep.erase(v);
    return induced(d, keep);
}

} // namespace tsplit
