#include "tsplit/digraph.hpp"

#include "tsplit/errors.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace tsplit {

namespace {

// Splits on '\n' and reports whether the text ended with one.
auto split_lines(const std::string& text, bool& trailing_newline) -> std::vector<std::string> {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto end = text.find('\n', start);
        if (end == std::string::npos) {
            lines.push_back(text.substr(start));
            trailing_newline = false;
            return lines;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    trailing_newline = !text.empty();
    return lines;
}

} // namespace

auto read_digraph(const std::string& text) -> Digraph {
    bool trailing_newline = false;
    const auto lines = split_lines(text, trailing_newline);
    if (lines.empty())
        throw ParseError(1, "missing vertex count");

    const std::string& header = lines[0];
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
    if (header.empty() || ec != std::errc{} || ptr != header.data() + header.size())
        throw ParseError(1, "header must be a decimal vertex count, got '" + header + "'");

    if (lines.size() != n + 1)
        throw ParseError(lines.size(), "expected " + std::to_string(n) + " rows, found " +
                                           std::to_string(lines.size() - 1));
    if (!trailing_newline)
        throw ParseError(lines.size(), "missing final newline");

    Digraph d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& row = lines[i + 1];
        if (row.size() != n)
            throw ParseError(i + 2, "row has " + std::to_string(row.size()) + " characters, expected " +
                                        std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            const char c = row[j];
            if (c != '0' && c != '1')
                throw ParseError(i + 2, std::string("unexpected character '") + c + "'");
            if (c == '1') {
                if (i == j)
                    throw ParseError(i + 2, "self-loop at vertex " + std::to_string(i));
                d.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return d;
}

auto read_digraph(std::istream& in) -> Digraph {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return read_digraph(text);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.n() << '\n';
    std::string row(d.n(), '0');
    for (Vertex u = 0; u < d.n(); ++u) {
        for (Vertex v = 0; v < d.n(); ++v)
            row[v] = d.has_arc(u, v) ? '1' : '0';
        out << row << '\n';
    }
}

auto write_digraph(const Digraph& d) -> std::string {
    std::ostringstream out;
    write_digraph(out, d);
    return out.str();
}

} // namespace tsplit
