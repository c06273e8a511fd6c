#pragma once

#include "estrada/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace estrada {

/// Depths of the vertices of a rooted tree in preorder, root at depth 0.
using LevelSequence = std::vector<int>;

Graph tree_from_level_sequence(const LevelSequence& levels);
std::string to_string(const LevelSequence& levels);

/// Streams one representative of every free tree on n vertices, as the
/// center-rooted canonical level sequence, in the constant-amortized-time
/// order of Wright, Richmond, Odlyzko and McKay. Sequences come out in
/// strictly decreasing lexicographic order, starting from the path.
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(int n);

    /// The next tree, or nullptr once the stream is exhausted. The pointer
    /// stays valid until the following call.
    const LevelSequence* next();

private:
    bool advance_to_valid();

    int n_;
    LevelSequence layout_;
    bool started_ = false;
    bool done_ = false;
};

std::uint64_t count_trees(int n);

/// Name of the tree among the families that matter for the LEE ranking
/// ("path", "star", "double_star(a,b)", "broom"), or an empty string.
std::string identify_tree_family(const Graph& t);

struct RankedTree {
    LevelSequence levels;
    double lee = 0;
    std::string family;
    /// lee - lee of the next entry in ranking order (the tree just outside
    /// the list for the last entry); 0 when there is no next tree.
    double margin_to_next = 0;
    /// Decided sign of that difference (+1 strict, 0 unresolved tie). Taken
    /// from the eigen route, or from the exact route when flagged.
    int order_sign = 1;
    bool exact_decided = false;
};

struct AmbiguousPair {
    LevelSequence first;
    LevelSequence second;
    int sign = 0; // sign of LEE(first) - LEE(second) on the exact route
};

struct TreeRanking {
    int n = 0;
    std::uint64_t count = 0;
    std::vector<RankedTree> top;    // LEE descending
    std::vector<RankedTree> bottom; // LEE ascending; margin_to_next is then lee(next) - lee
    std::vector<AmbiguousPair> ambiguous;
    /// A cluster of near-equal values that reaches a kept entry also reached
    /// the edge of the retained candidate buffer, so trees outside it could
    /// not be re-decided.
    bool boundary_unresolved = false;
};

struct RankOptions {
    int top_k = 4;
    int bottom_k = 1;
    int threads = 1;
    std::size_t chunk_size = 4096;
};

/// Computes LEE of every free tree on n vertices (n >= 4) and keeps the
/// extremes. Values within a relative 1e-6 of each other are re-ordered on
/// the exact line-graph moment route. The result does not depend on the
/// thread count or chunk size.
TreeRanking rank_trees(int n, const RankOptions& options);

struct ExtremalCheck {
    int n = 0;
    std::uint64_t count = 0;
    bool ok = true;
    std::vector<std::string> failures;
    TreeRanking ranking;
};

struct ExtremalReport {
    int n_max = 0;
    bool ok = true;
    std::vector<ExtremalCheck> per_n;
};

/// For 5 <= n <= n_max: P_n strict unique minimum, S_n strict unique maximum,
/// S_n(2,n-2) unique second; for n >= 6 also S_n(3,n-3) third and
/// C_n(n-5) fourth.
ExtremalReport verify_extremal(int n_max, int threads, int n_min = 5);

} // namespace estrada
