#include "estrada/random.hpp"

#include "estrada/error.hpp"

#include <set>
#include <vector>

namespace estrada {

namespace {

Graph decode_pruefer(const std::vector<int>& code, int n)
{
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : code)
        ++degree[static_cast<std::size_t>(x)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            leaves.insert(v);
    std::vector<Edge> edges;
    for (int x : code) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, x});
        if (--degree[static_cast<std::size_t>(x)] == 1)
            leaves.insert(x);
    }
    const int u = *leaves.begin();
    const int v = *std::next(leaves.begin());
    edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

} // namespace

Graph random_tree(SplitMix64& rng, int n)
{
    if (n < 1)
        throw invalid_parameter("random_tree needs n >= 1");
    if (n == 1)
        return Graph::from_edges(1, {});
    if (n == 2)
        return build_path(2);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto& x : code)
        x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    return decode_pruefer(code, n);
}

Graph random_graph(SplitMix64& rng, int n, int per_mille)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(1000) < static_cast<std::uint64_t>(per_mille))
                edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph random_bipartite_graph(SplitMix64& rng, int n, int extra)
{
    const Graph tree = random_tree(rng, n);
    const auto colours = bipartition(tree).color;
    std::vector<Edge> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (colours[static_cast<std::size_t>(u)] != colours[static_cast<std::size_t>(v)] && !tree.has_edge(u, v))
                candidates.push_back({u, v});
    auto edges = tree.edges();
    for (int i = 0; i < extra && !candidates.empty(); ++i) {
        const auto pick = rng.below(candidates.size());
        edges.push_back(candidates[pick]);
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Graph::from_edges(n, edges);
}

} // namespace estrada
