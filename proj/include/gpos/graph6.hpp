#pragma once

#include <string>
#include <string_view>

#include <gpos/error.hpp>
#include <gpos/graph.hpp>

namespace gpos {

// graph6, short form only: one header byte n+63, then the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte (+63),
// most significant bit first, zero padded.

inline constexpr std::size_t kGraph6MaxOrder = 62;

inline auto parse_graph6(std::string_view text) -> Graph
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("graph6: empty input", 0);

    auto header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        throw ParseError("graph6: long-form orders (n > 62) are not supported", 0);
    if (header < 63 || header > 126)
        throw ParseError("graph6: invalid header byte", 0);
    const std::size_t n = header - 63;
    if (n == 0)
        throw ParseError("graph6: graphs must have at least one vertex", 0);

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    for (std::size_t i = 1; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: invalid payload byte", i);
    }
    if (text.size() < 1 + bytes)
        throw ParseError("graph6: truncated payload", text.size());
    if (text.size() > 1 + bytes)
        throw ParseError("graph6: trailing bytes after payload", 1 + bytes);

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            auto byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    if (bytes > 0) {
        auto last = static_cast<unsigned char>(text[bytes]) - 63;
        auto padding = bytes * 6 - bits;
        if (last & ((1U << padding) - 1))
            throw ParseError("graph6: non-zero padding bits", bytes);
    }
    return g;
}

inline auto write_graph6(const Graph & g) -> std::string
{
    const auto n = g.order();
    if (n == 0 || n > kGraph6MaxOrder)
        throw CapacityError("graph6: only orders 1..62 are supported, got " + std::to_string(n));
    const std::size_t bits = n * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, static_cast<char>(0));
    out[0] = static_cast<char>(n + 63);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j))
                out[1 + k / 6] = static_cast<char>(out[1 + k / 6] | (1 << (5 - k % 6)));
    for (std::size_t i = 1; i < out.size(); ++i)
        out[i] = static_cast<char>(out[i] + 63);
    return out;
}

} // namespace gpos
