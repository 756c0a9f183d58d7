#include "srgint/graph6.hpp"

#include <vector>

namespace srgint {

std::string graph6_encode(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, bits = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) pos = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    auto byte_at = [&](std::size_t i) -> unsigned {
        if (i >= text.size()) throw ParseError("graph6: unexpected end of input", i);
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range", i);
        return c - 63u;
    };

    std::size_t n = 0;
    if (pos >= text.size()) throw ParseError("graph6: empty input", pos);
    if (text[pos] != '~') {
        n = byte_at(pos++);
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        pos += 2;
        for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(pos++);
    } else {
        pos += 1;
        for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
    }

    Graph g(n);
    const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
    const std::size_t expected_bytes = (pairs + 5) / 6;
    if (text.size() - pos != expected_bytes)
        throw ParseError("graph6: expected " + std::to_string(expected_bytes) + " data bytes, found " +
                             std::to_string(text.size() - pos),
                         text.size() < pos + expected_bytes ? text.size() : pos + expected_bytes);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const auto value = byte_at(pos + bit / 6);
            if ((value >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
        }
    return g;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto edges = nlohmann::json::array();
    for (auto [x, y] : g.edges()) edges.push_back({x, y});
    j["edges"] = std::move(edges);
    j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    const auto n = j.at("n").get<std::size_t>();
    Graph g(n);
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<std::string>>());
    return g;
}

}  // namespace srgint
