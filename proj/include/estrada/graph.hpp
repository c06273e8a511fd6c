#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace estrada {

using vertex_t = int;

struct Edge {
    vertex_t u;
    vertex_t v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Adjacency lists are kept sorted and symmetric. A Graph never changes after
/// construction; every transformation returns a new value.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Each edge may be given in either
    /// orientation. Throws invalid_parameter on self-loops, duplicate edges or
    /// out-of-range endpoints.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const vertex_t> neighbors(vertex_t v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(vertex_t v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const noexcept;
    bool has_edge(vertex_t u, vertex_t v) const;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Degrees sorted in non-increasing order.
    std::vector<int> degree_sequence() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<vertex_t>> adjacency_;
    std::size_t edge_count_ = 0;
};

Graph build_path(int n);
Graph build_star(int n);
Graph build_cycle(int n);
Graph build_complete(int n);

/// S_n(a, n-a): centers 0 and 1 joined by an edge, with a-1 pendants on
/// vertex 0 and n-a-1 pendants on vertex 1.
Graph build_double_star(int n, int a);

/// C_n(n-5): the path 0-1-2-3-4 with n-5 extra pendants on vertex 2.
Graph build_broom(int n);

/// Vertices of the result are the edges of g in lexicographic order.
Graph line_graph(const Graph& g);

struct Bipartition {
    bool bipartite = false;
    std::vector<int> color; // 0/1 per vertex; empty when not bipartite
};

Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// True when g is K_{1,n-1} (including the trivial stars on 1 and 2 vertices).
bool is_star(const Graph& g);

/// One or two centers of a tree, ascending.
std::vector<vertex_t> tree_centers(const Graph& t);

/// Canonical AHU string of the tree rooted at its center (minimum over both
/// centers when bicentral). Equal strings iff isomorphic trees.
std::string tree_canonical_form(const Graph& t);

bool is_isomorphic_tree(const Graph& t1, const Graph& t2);

} // namespace estrada
