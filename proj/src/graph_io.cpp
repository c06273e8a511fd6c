#include "estrada/graph_io.hpp"

#include "estrada/error.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace estrada {

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size())
            break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

long long to_integer(const Token& tok, std::size_t line_no)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw parse_error(line_no, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
    return value;
}

} // namespace

Graph parse_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().text.front() == '#')
            continue;
        if (tokens.size() != 2)
            throw parse_error(line_no, tokens.size() > 2 ? tokens[2].column : 0,
                              have_header ? "expected 'u v'" : "expected header 'n m'");

        long long x = to_integer(tokens[0], line_no);
        long long y = to_integer(tokens[1], line_no);
        if (!have_header) {
            if (x < 0 || x > 1'000'000)
                throw parse_error(line_no, tokens[0].column, "vertex count must be in 0..1000000");
            if (y < 0 || y > x * (x - 1) / 2)
                throw parse_error(line_no, tokens[1].column, "edge count out of range for a simple graph");
            n = x;
            m = y;
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw parse_error(line_no, 1, "more edge lines than the header's m = " + std::to_string(m));
        if (x < 0 || x >= n)
            throw parse_error(line_no, tokens[0].column, "vertex " + std::to_string(x) + " out of range");
        if (y < 0 || y >= n)
            throw parse_error(line_no, tokens[1].column, "vertex " + std::to_string(y) + " out of range");
        if (x == y)
            throw parse_error(line_no, tokens[1].column, "self-loop at vertex " + std::to_string(x));
        const std::pair<int, int> key{static_cast<int>(std::min(x, y)), static_cast<int>(std::max(x, y))};
        if (!seen.insert(key).second)
            throw parse_error(line_no, tokens[0].column,
                              "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
        edges.push_back({static_cast<int>(x), static_cast<int>(y)});
    }
    if (!have_header)
        throw parse_error(line_no + 1, 0, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(line_no + 1, 0,
                          "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

Graph decode_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    if (text.empty())
        throw parse_error(1, 0, "empty graph6 string");

    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw parse_error(1, i + 1, "byte outside the graph6 range 63..126");
    }
    const int first = static_cast<unsigned char>(text[0]);
    if (first == 126)
        throw parse_error(1, 1, "multi-byte graph6 size field not supported (n > 62)");
    const int n = first - 63;

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - 1 != body)
        throw parse_error(1, 0,
                          "graph6 body has " + std::to_string(text.size() - 1) + " bytes, expected " +
                              std::to_string(body) + " for n = " + std::to_string(n));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1)
                edges.push_back({u, v});
        }
    }
    for (; k < body * 6; ++k) {
        const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
        if ((byte >> (5 - static_cast<int>(k % 6))) & 1)
            throw parse_error(1, 1 + k / 6 + 1, "nonzero padding bit in graph6 string");
    }
    return Graph::from_edges(n, edges);
}

} // namespace estrada
