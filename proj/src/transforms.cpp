#include "estrada/transforms.hpp"

#include "estrada/error.hpp"

#include <algorithm>
#include <optional>
#include <queue>

namespace estrada {

namespace {

std::optional<SigmaSite> site_at(const Graph& g, vertex_t v)
{
    SigmaSite site;
    site.v = v;
    for (vertex_t w : g.neighbors(v)) {
        if (g.degree(w) == 1) {
            site.pendants.push_back(w);
        } else if (site.u == -1) {
            site.u = w;
        } else {
            return std::nullopt; // two non-pendant neighbours
        }
    }
    if (site.u == -1 || site.pendants.empty())
        return std::nullopt;
    return site;
}

} // namespace

std::vector<SigmaSite> find_sigma_sites(const Graph& g)
{
    std::vector<SigmaSite> out;
    if (is_star(g))
        return out;
    for (vertex_t v = 0; v < g.order(); ++v)
        if (auto site = site_at(g, v))
            out.push_back(std::move(*site));
    return out;
}

Graph sigma_transform(const Graph& g, const SigmaSite& site)
{
    if (site.v < 0 || site.v >= g.order())
        throw invalid_parameter("sigma site vertex out of range");
    auto actual = site_at(g, site.v);
    if (!actual || is_star(g))
        throw invalid_parameter("vertex " + std::to_string(site.v) + " is not a sigma site");
    auto requested = site;
    std::sort(requested.pendants.begin(), requested.pendants.end());
    if (!(*actual == requested))
        throw invalid_parameter("stale sigma site at vertex " + std::to_string(site.v));

    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const Edge& e : g.edges()) {
        const bool moved = (e.u == site.v || e.v == site.v) &&
                           std::binary_search(actual->pendants.begin(), actual->pendants.end(),
                                              e.u == site.v ? e.v : e.u);
        if (moved)
            edges.push_back({site.u, e.u == site.v ? e.v : e.u});
        else
            edges.push_back(e);
    }
    return Graph::from_edges(g.order(), edges);
}

std::vector<Graph> sigma_chain_to_star(const Graph& t)
{
    if (!is_tree(t))
        throw invalid_input("sigma_chain_to_star: input is not a tree");
    if (t.order() < 3)
        throw invalid_input("sigma_chain_to_star: needs at least 3 vertices");

    std::vector<Graph> chain{t};
    while (!is_star(chain.back())) {
        const Graph& cur = chain.back();
        const vertex_t root = tree_centers(cur).front();
        const auto n = static_cast<std::size_t>(cur.order());
        std::vector<int> depth(n, -1);
        std::vector<vertex_t> parent(n, -1);
        std::queue<vertex_t> queue;
        depth[static_cast<std::size_t>(root)] = 0;
        queue.push(root);
        int deepest = 0;
        while (!queue.empty()) {
            vertex_t v = queue.front();
            queue.pop();
            deepest = std::max(deepest, depth[static_cast<std::size_t>(v)]);
            for (vertex_t w : cur.neighbors(v)) {
                if (depth[static_cast<std::size_t>(w)] == -1) {
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push(w);
                }
            }
        }
        vertex_t pick = -1;
        for (vertex_t v = 0; v < cur.order(); ++v)
            if (depth[static_cast<std::size_t>(v)] == deepest) {
                const vertex_t p = parent[static_cast<std::size_t>(v)];
                if (pick == -1 || p < pick)
                    pick = p;
            }
        // a non-star has depth >= 2 from its center, so pick is not the root
        // and all of its children are deepest leaves
        auto site = site_at(cur, pick);
        if (!site)
            throw numerical_failure("sigma chain: parent of deepest leaf is not a sigma site");
        chain.push_back(sigma_transform(cur, *site));
        if (chain.size() > n)
            throw numerical_failure("sigma chain did not terminate");
    }
    return chain;
}

} // namespace estrada
