#include "eqdeg/graph6.hpp"

#include "eqdeg/errors.hpp"

namespace eqdeg {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t body_bytes(int n)
{
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw InputError("graph6 small format holds at most " + std::to_string(kGraph6MaxOrder) +
                         " vertices, got " + std::to_string(n));

    std::string out;
    out.reserve(1 + body_bytes(n));
    out.push_back(static_cast<char>(kBias + n));

    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
    return out;
}

Graph from_graph6(std::string_view text)
{
    if (text.empty())
        throw FormatError("graph6 input is empty", 0);

    auto value_at = [&](std::size_t pos) {
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < kBias || c > kMaxByte)
            throw FormatError("graph6 byte " + std::to_string(c) + " outside 63..126", pos);
        return c - kBias;
    };

    const int n = value_at(0);
    if (n > kGraph6MaxOrder)
        throw FormatError("graph6 large-order format is not supported", 0);

    const std::size_t need = 1 + body_bytes(n);
    if (text.size() < need)
        throw FormatError("graph6 adjacency section truncated: expected " + std::to_string(need) + " bytes, got " +
                              std::to_string(text.size()),
                          text.size());
    if (text.size() > need)
        throw FormatError("unexpected trailing bytes after graph6 adjacency section", need);

    GraphBuilder b(n);
    std::size_t pos = 1;
    int chunk = 0;
    int left = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (left == 0) {
                chunk = value_at(pos++);
                left = 6;
            }
            --left;
            if ((chunk >> left) & 1)
                b.add_edge(i, j);
        }
    }
    if (left > 0 && (chunk & ((1 << left) - 1)) != 0)
        throw FormatError("graph6 padding bits must be zero", pos - 1);
    return std::move(b).build();
}

}  // namespace eqdeg
