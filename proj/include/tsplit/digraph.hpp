#ifndef TSPLIT_DIGRAPH_HPP
#define TSPLIT_DIGRAPH_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tsplit {

using Word = std::uint64_t;
using Vertex = std::uint32_t;
/// A count of out-neighbours; always at most n - 1.
using Degree = std::uint32_t;

inline constexpr std::size_t bits_per_word = 64;

constexpr auto words_for(std::size_t n) -> std::size_t {
    return (n + bits_per_word - 1) / bits_per_word;
}

/**
 * A subset of {0, ..., owner_n - 1}, stored as a packed bitset.
 *
 * Bits at positions >= owner_n are always zero, so word-wise popcount
 * equals the cardinality.
 */
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::size_t owner_n);
    VertexSet(std::size_t owner_n, std::initializer_list<Vertex> ids);
    VertexSet(std::size_t owner_n, std::span<const Vertex> ids);

    static auto full(std::size_t owner_n) -> VertexSet;
    /// Low bits of `mask`; requires owner_n <= 64.
    static auto from_mask(std::size_t owner_n, Word mask) -> VertexSet;

    auto owner_n() const -> std::size_t { return _owner_n; }
    auto size() const -> std::size_t;
    auto empty() const -> bool;
    auto contains(Vertex v) const -> bool;

    void insert(Vertex v);
    void erase(Vertex v);

    auto words() const -> std::span<const Word> { return _bits; }
    /// Requires owner_n <= 64.
    auto to_mask() const -> Word;

    /// Members in increasing order.
    auto ids() const -> std::vector<Vertex>;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < _bits.size(); ++w) {
            Word bits = _bits[w];
            while (bits) {
                f(static_cast<Vertex>(w * bits_per_word + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    auto operator|(const VertexSet& other) const -> VertexSet;
    auto operator&(const VertexSet& other) const -> VertexSet;
    auto complement() const -> VertexSet;

    friend auto operator==(const VertexSet&, const VertexSet&) -> bool = default;

  private:
    std::size_t _owner_n = 0;
    std::vector<Word> _bits;
};

/// Lexicographic order on the increasing id sequences (a proper prefix is smaller).
auto lex_less(const VertexSet& a, const VertexSet& b) -> bool;

/// "{0,3,6}"
auto to_string(const VertexSet& x) -> std::string;

/**
 * Dense digraph on vertices 0..n-1 without loops. Row u holds the
 * out-neighbourhood of u, padded to a whole number of words.
 */
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(std::size_t n);

    auto n() const -> std::size_t { return _n; }
    auto words_per_row() const -> std::size_t { return _words_per_row; }

    auto has_arc(Vertex u, Vertex v) const -> bool {
        return (_bits[u * _words_per_row + v / bits_per_word] >> (v % bits_per_word)) & 1U;
    }

    /// Adds u -> v; throws DomainError on a loop or an id out of range.
    void add_arc(Vertex u, Vertex v);
    void remove_arc(Vertex u, Vertex v);
    /// Adds u -> v for every v in [lo, hi), which must not contain u.
    void add_arcs_to_range(Vertex u, Vertex lo, Vertex hi);
    /// ORs `len` bits of `src` into row u starting at column `offset`.
    void or_into_row(Vertex u, std::size_t offset, std::span<const Word> src, std::size_t len);

    auto row(Vertex u) const -> std::span<const Word> {
        return {_bits.data() + u * _words_per_row, _words_per_row};
    }

    auto out_degree(Vertex u) const -> Degree;
    auto in_degree(Vertex v) const -> Degree;
    auto arc_count() const -> std::size_t;

    friend auto operator==(const Digraph&, const Digraph&) -> bool = default;

  private:
    std::size_t _n = 0;
    std::size_t _words_per_row = 0;
    std::vector<Word> _bits;
};

/// Number of out-neighbours of v inside X. Requires v in X.
auto out_degree_in(const Digraph& d, const VertexSet& x, Vertex v) -> Degree;

/// Minimum out-degree of D[X]; 0 when X is empty.
auto min_out_degree(const Digraph& d, const VertexSet& x) -> Degree;
auto min_out_degree(const Digraph& d) -> Degree;

/// D[X] relabelled by increasing original id.
auto induced(const Digraph& d, const VertexSet& x) -> Digraph;

auto is_tournament(const Digraph& d) -> bool;

/// D - v, with ids above v shifted down by one.
auto delete_vertex(const Digraph& d, Vertex v) -> Digraph;

/*
 * Text format:
 *
 *   n
 *   <n lines of n characters from {0,1}>
 *
 * Character j of row i is 1 iff i -> j. The diagonal must be 0 and the
 * file ends with a newline.
 */
auto read_digraph(std::istream& in) -> Digraph;
auto read_digraph(const std::string& text) -> Digraph;
void write_digraph(std::ostream& out, const Digraph& d);
auto write_digraph(const Digraph& d) -> std::string;

} // namespace tsplit

#endif
