#ifndef SUPERTOUGH_FORMATS_HPP_
#define SUPERTOUGH_FORMATS_HPP_

// graph6 and edge-list codecs.
//
// graph6: N(n) is one byte n+63 for n <= 62, else '~' followed by three
// 6-bit big-endian groups (each +63). The body is the upper triangle read
// column by column, pairs (i, j) for j = 1..n-1, i = 0..j-1, packed into
// 6-bit groups (+63) and zero-padded.
//
// Edge list: first line "n m", then m lines "u v" with 0-based u < v.

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supertough/graph.hpp"

namespace supertough {

enum class ParseErrorKind {
    BadHeader,       // missing or invalid order prefix
    BadCharacter,    // byte outside the printable 63..126 range
    Truncated,       // fewer body bytes than the order requires
    TrailingData,    // extra bytes after the body
    NonzeroPadding,  // pad bits of the final group are set
    BadEdge,         // edge list: malformed, out of range, loop or duplicate
    CountMismatch,   // edge list: header count disagrees with body
};

inline const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::BadHeader: return "bad header";
        case ParseErrorKind::BadCharacter: return "bad character";
        case ParseErrorKind::Truncated: return "truncated";
        case ParseErrorKind::TrailingData: return "trailing data";
        case ParseErrorKind::NonzeroPadding: return "nonzero padding";
        case ParseErrorKind::BadEdge: return "bad edge";
        case ParseErrorKind::CountMismatch: return "count mismatch";
    }
    return "unknown";
}

class ParseError : public std::runtime_error {
 public:
    ParseError(ParseErrorKind kind, const std::string& what)
        : std::runtime_error{std::string{to_string(kind)} + ": " + what}, kind_{kind} {}

    ParseErrorKind kind() const { return kind_; }

 private:
    ParseErrorKind kind_;
};

namespace detail {

inline std::string_view strip_line_end(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    return text;
}

inline int graph6_value(char c, std::size_t pos) {
    const int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126)
        throw ParseError{ParseErrorKind::BadCharacter, "byte " + std::to_string(v) + " at offset " + std::to_string(pos)};
    return v - 63;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
    text = detail::strip_line_end(text);
    if (text.empty()) throw ParseError{ParseErrorKind::BadHeader, "empty input"};

    std::size_t pos = 0;
    long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw EnvelopeError{"graph6 orders above 258047 are not supported"};
        if (text.size() < 4) throw ParseError{ParseErrorKind::BadHeader, "incomplete long-form order"};
        for (std::size_t i = 1; i <= 3; ++i) {
            const int v = static_cast<unsigned char>(text[i]);
            if (v < 63 || v > 126) throw ParseError{ParseErrorKind::BadHeader, "invalid long-form order byte"};
            n = (n << 6) | (v - 63);
        }
        if (n < 63) throw ParseError{ParseErrorKind::BadHeader, "long-form order below 63"};
        pos = 4;
    } else {
        const int v = static_cast<unsigned char>(text[0]);
        if (v < 63 || v > 125) throw ParseError{ParseErrorKind::BadHeader, "invalid order byte"};
        n = v - 63;
        pos = 1;
    }
    if (n < 1 || n > kMaxOrder)
        throw EnvelopeError{"graph6 order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder)};

    const long pairs = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() < pos + body)
        throw ParseError{ParseErrorKind::Truncated,
                         "expected " + std::to_string(body) + " body bytes, got " + std::to_string(text.size() - pos)};
    if (text.size() > pos + body)
        throw ParseError{ParseErrorKind::TrailingData, std::to_string(text.size() - pos - body) + " extra bytes"};

    GraphBuilder b{static_cast<int>(n)};
    long k = 0;
    for (std::size_t byte = 0; byte < body; ++byte) {
        const int v = detail::graph6_value(text[pos + byte], pos + byte);
        for (int shift = 5; shift >= 0; --shift, ++k) {
            const bool set = (v >> shift) & 1;
            if (k >= pairs) {
                if (set) throw ParseError{ParseErrorKind::NonzeroPadding, "padding bit set"};
                continue;
            }
            if (set) {
                // k-th pair in column-major order: column j holds pairs (0..j-1, j).
                int j = 1;
                long start = 0;
                while (start + j <= k) start += j++;
                b.add_edge(static_cast<int>(k - start), j);
            }
        }
    }
    return b.build();
}

inline std::string serialize_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// edge list

namespace detail {

inline bool read_int(std::istringstream& in, long& out) {
    std::string token;
    if (!(in >> token)) return false;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string{text}};
    std::string line;
    if (!std::getline(in, line)) throw ParseError{ParseErrorKind::BadHeader, "empty input"};
    std::istringstream header{line};
    long n = 0;
    long m = 0;
    std::string extra;
    if (!detail::read_int(header, n) || !detail::read_int(header, m) || (header >> extra))
        throw ParseError{ParseErrorKind::BadHeader, "expected \"n m\", got \"" + line + "\""};
    if (m < 0) throw ParseError{ParseErrorKind::BadHeader, "negative edge count"};
    if (n < 1 || n > kMaxOrder)
        throw EnvelopeError{"edge-list order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder)};

    GraphBuilder b{static_cast<int>(n)};
    long seen = 0;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row{line};
        long u = 0;
        long v = 0;
        const std::string where = "line " + std::to_string(line_no);
        if (!detail::read_int(row, u) || !detail::read_int(row, v) || (row >> extra))
            throw ParseError{ParseErrorKind::BadEdge, where + ": expected \"u v\""};
        if (u < 0 || v >= n || u >= v)
            throw ParseError{ParseErrorKind::BadEdge, where + ": need 0 <= u < v < n"};
        if (b.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError{ParseErrorKind::BadEdge, where + ": duplicate edge"};
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen != m)
        throw ParseError{ParseErrorKind::CountMismatch,
                         "header says " + std::to_string(m) + " edges, body has " + std::to_string(seen)};
    return b.build();
}

inline std::string serialize_edge_list(const Graph& g) {
    const auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace supertough

#endif  // SUPERTOUGH_FORMATS_HPP_
