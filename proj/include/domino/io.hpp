#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "domino/error.hpp"
#include "domino/graph.hpp"

namespace domino {

// graph6: a size header N(n) followed by the upper triangle of the adjacency
// matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed into
// 6-bit groups, each emitted as the byte 63 + group. Final group zero-padded.

namespace detail {

inline void g6_push_six(std::string& out, unsigned value) { out.push_back(static_cast<char>(63 + (value & 63U))); }

inline std::string g6_size_header(std::size_t n) {
    std::string out;
    if (n <= 62) {
        g6_push_six(out, static_cast<unsigned>(n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) g6_push_six(out, static_cast<unsigned>(n >> shift));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) g6_push_six(out, static_cast<unsigned>(n >> shift));
    }
    return out;
}

} // namespace detail

inline std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out = detail::g6_size_header(n);
    unsigned group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                detail::g6_push_six(out, group);
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) detail::g6_push_six(out, group << (6 - filled));
    return out;
}

/// Parses one graph6 line. An optional ">>graph6<<" prefix and trailing
/// line terminators are accepted.
inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view prefix = ">>graph6<<";
    std::size_t base = 0;
    if (text.substr(0, prefix.size()) == prefix) base = prefix.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    auto six = [&](std::size_t pos) -> unsigned {
        if (pos >= text.size()) throw ParseError(fmt::format("graph6: truncated input at byte {}", pos), pos, ParseError::Unit::byte_offset);
        const auto c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw ParseError(fmt::format("graph6: byte {} (0x{:02x}) is outside the printable range 63..126", pos, c), pos,
                             ParseError::Unit::byte_offset);
        return c - 63U;
    };

    std::size_t pos = base;
    std::size_t n = six(pos);
    if (n < 63) {
        pos += 1;
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        n = 0;
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | six(pos + i);
        if (n <= 258047)
            throw ParseError(fmt::format("graph6: 8-byte size header at byte {} encodes {} (non-canonical)", pos, n), pos,
                             ParseError::Unit::byte_offset);
        pos += 8;
    } else {
        n = 0;
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | six(pos + i);
        if (n <= 62)
            throw ParseError(fmt::format("graph6: 4-byte size header at byte {} encodes {} (non-canonical)", pos, n), pos,
                             ParseError::Unit::byte_offset);
        pos += 4;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError(fmt::format("graph6: expected {} data bytes for n={} but found {} (starting at byte {})", bytes, n,
                                     text.size() - pos, pos),
                         pos, ParseError::Unit::byte_offset);

    Graph::Builder b(n);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const unsigned group = six(pos + bit / 6);
            if ((group >> (5 - bit % 6)) & 1U) b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t last = pos + bytes - 1;
        const unsigned pad_mask = (1U << (6 - bits % 6)) - 1;
        if (six(last) & pad_mask)
            throw ParseError(fmt::format("graph6: nonzero padding bits in byte {}", last), last, ParseError::Unit::byte_offset);
    }
    return std::move(b).build();
}

/// Edge list: first line "n m", then m lines "u v" (0-based). Blank lines
/// and lines starting with '#' are skipped.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            const auto first = out.find_first_not_of(" \t\r");
            if (first == std::string::npos || out[first] == '#') continue;
            return true;
        }
        return false;
    };
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(fmt::format("edge list line {}: {}", line_no, msg), line_no, ParseError::Unit::line);
    };
    auto read_pair = [&](const std::string& l, long long& a, long long& c) {
        std::istringstream ls(l);
        std::string extra;
        if (!(ls >> a >> c)) throw fail(fmt::format("expected two integers, got '{}'", l));
        if (ls >> extra) throw fail(fmt::format("unexpected trailing token '{}'", extra));
    };

    if (!next_line(line)) throw ParseError("edge list: empty input", 0, ParseError::Unit::line);
    long long n = 0;
    long long m = 0;
    read_pair(line, n, m);
    if (n < 0 || m < 0) throw fail("negative order or size");

    Graph::Builder b(static_cast<std::size_t>(n));
    for (long long e = 0; e < m; ++e) {
        if (!next_line(line)) throw fail(fmt::format("expected {} edges, found {}", m, e));
        long long u = 0;
        long long v = 0;
        read_pair(line, u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) throw fail(fmt::format("vertex out of range in edge {} {}", u, v));
        if (u == v) throw fail(fmt::format("self-loop at vertex {}", u));
        if (!b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) throw fail(fmt::format("duplicate edge {} {}", u, v));
    }
    if (next_line(line)) throw fail("trailing content after the declared edges");
    return std::move(b).build();
}

inline std::string emit_edge_list(const Graph& g) {
    std::string out = fmt::format("{} {}\n", g.order(), g.size());
    for (auto [u, v] : g.edges()) out += fmt::format("{} {}\n", u, v);
    return out;
}

/// Parses either format: text whose first non-blank character is a digit or
/// '#' is an edge list, anything else graph6.
inline Graph parse_graph_auto(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty graph input", 0, ParseError::Unit::byte_offset);
    const char c = text[first];
    if ((c >= '0' && c <= '9') || c == '#') return parse_edge_list(text);
    auto line = text.substr(first);
    const auto eol = line.find('\n');
    if (eol != std::string_view::npos) {
        const auto rest = line.substr(eol + 1);
        if (rest.find_first_not_of(" \t\r\n") != std::string_view::npos)
            throw ParseError("graph6 input contains more than one graph", first + eol + 1, ParseError::Unit::byte_offset);
        line = line.substr(0, eol);
    }
    return parse_graph6(line);
}

} // namespace domino
