#include "estrada/graph.hpp"

#include "estrada/error.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace estrada {

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw invalid_parameter("negative vertex count");

    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw invalid_parameter("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
        if (e.u == e.v)
            throw invalid_parameter("self-loop at vertex " + std::to_string(e.u));
        g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw invalid_parameter("duplicate edge");
    }
    g.edge_count_ = edges.size();
    return g;
}

int Graph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (const auto& list : adjacency_)
        best = std::max(best, list.size());
    return static_cast<int>(best);
}

bool Graph::has_edge(vertex_t u, vertex_t v) const
{
    if (u < 0 || u >= order() || v < 0 || v >= order())
        return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (vertex_t u = 0; u < order(); ++u)
        for (vertex_t v : neighbors(u))
            if (u < v)
                out.push_back({u, v});
    return out;
}

std::vector<int> Graph::degree_sequence() const
{
    std::vector<int> out;
    out.reserve(adjacency_.size());
    for (const auto& list : adjacency_)
        out.push_back(static_cast<int>(list.size()));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

namespace {

void require_positive(int n, const char* what)
{
    if (n < 1)
        throw invalid_parameter(std::string(what) + " needs n >= 1, got " + std::to_string(n));
}

} // namespace

Graph build_path(int n)
{
    require_positive(n, "path");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph::from_edges(n, edges);
}

Graph build_star(int n)
{
    require_positive(n, "star");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        edges.push_back({0, i});
    return Graph::from_edges(n, edges);
}

Graph build_cycle(int n)
{
    if (n < 3)
        throw invalid_parameter("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, edges);
}

Graph build_complete(int n)
{
    require_positive(n, "complete graph");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

Graph build_double_star(int n, int a)
{
    if (n < 4)
        throw invalid_parameter("double star needs n >= 4, got " + std::to_string(n));
    if (a < 2 || a > n / 2)
        throw invalid_parameter("double star needs 2 <= a <= n/2, got a=" + std::to_string(a));
    std::vector<Edge> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < a - 1; ++i)
        edges.push_back({0, next++});
    for (int i = 0; i < n - a - 1; ++i)
        edges.push_back({1, next++});
    return Graph::from_edges(n, edges);
}

Graph build_broom(int n)
{
    if (n < 6)
        throw invalid_parameter("broom needs n >= 6, got " + std::to_string(n));
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    for (int v = 5; v < n; ++v)
        edges.push_back({2, v});
    return Graph::from_edges(n, edges);
}

Graph line_graph(const Graph& g)
{
    const auto edges = g.edges();
    // incident[v] lists indices (into edges) of edges touching v
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
        incident[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<int>(i));
    }
    std::vector<Edge> out;
    for (const auto& list : incident)
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                out.push_back({list[i], list[j]});
    // simple graph: two edges share at most one endpoint, so no duplicates
    return Graph::from_edges(static_cast<int>(edges.size()), out);
}

Bipartition bipartition(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> color(n, -1);
    std::queue<vertex_t> queue;
    for (vertex_t s = 0; s < g.order(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1)
            continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.push(s);
        while (!queue.empty()) {
            vertex_t v = queue.front();
            queue.pop();
            for (vertex_t w : g.neighbors(v)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    queue.push(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return {};
                }
            }
        }
    }
    return {true, std::move(color)};
}

bool is_bipartite(const Graph& g)
{
    return bipartition(g).bipartite;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<vertex_t> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        vertex_t v = stack.back();
        stack.pop_back();
        for (vertex_t w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.order();
}

bool is_tree(const Graph& g)
{
    // the empty graph is not a tree
    return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

bool is_star(const Graph& g)
{
    const int n = g.order();
    if (n == 0 || g.size() != static_cast<std::size_t>(n - 1))
        return false;
    for (vertex_t v = 0; v < n; ++v)
        if (g.degree(v) == n - 1)
            return true;
    return false;
}

std::vector<vertex_t> tree_centers(const Graph& t)
{
    if (!is_tree(t))
        throw invalid_input("tree_centers: input is not a tree");
    const int n = t.order();
    if (n <= 2) {
        std::vector<vertex_t> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            all[static_cast<std::size_t>(i)] = i;
        return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<vertex_t> layer;
    for (vertex_t v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1)
            layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<vertex_t> next;
        for (vertex_t leaf : layer)
            for (vertex_t w : t.neighbors(leaf))
                if (--deg[static_cast<std::size_t>(w)] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace {

std::string ahu_encode(const Graph& t, vertex_t root)
{
    // iterative post-order to stay safe on long paths
    const auto n = static_cast<std::size_t>(t.order());
    std::vector<vertex_t> parent(n, -1);
    std::vector<vertex_t> order;
    order.reserve(n);
    std::vector<vertex_t> stack{root};
    parent[static_cast<std::size_t>(root)] = root;
    while (!stack.empty()) {
        vertex_t v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (vertex_t w : t.neighbors(v)) {
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = v;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::vector<std::string>> child_codes(n);
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        auto& kids = child_codes[v];
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids)
            s += k;
        s += ")";
        kids.clear();
        if (*it != root)
            child_codes[static_cast<std::size_t>(parent[v])].push_back(std::move(s));
        else
            code[v] = std::move(s);
    }
    return code[static_cast<std::size_t>(root)];
}

} // namespace

std::string tree_canonical_form(const Graph& t)
{
    const auto centers = tree_centers(t); // validates
    if (centers.empty())
        return {};
    std::string best = ahu_encode(t, centers.front());
    if (centers.size() == 2)
        best = std::min(best, ahu_encode(t, centers.back()));
    return best;
}

bool is_isomorphic_tree(const Graph& t1, const Graph& t2)
{
    if (!is_tree(t1) || !is_tree(t2))
        throw invalid_input("is_isomorphic_tree: both inputs must be trees");
    if (t1.order() != t2.order())
        return false;
    return tree_canonical_form(t1) == tree_canonical_form(t2);
}

} // namespace estrada
