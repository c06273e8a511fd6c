#include "estrada/enumeration.hpp"

#include "estrada/error.hpp"
#include "estrada/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

namespace estrada {

Graph tree_from_level_sequence(const LevelSequence& levels)
{
    if (levels.empty() || levels.front() != 0)
        throw invalid_input("level sequence must start with the root at depth 0");
    std::vector<Edge> edges;
    edges.reserve(levels.size());
    std::vector<vertex_t> last_at_depth{0};
    for (std::size_t i = 1; i < levels.size(); ++i) {
        const int d = levels[i];
        if (d < 1 || static_cast<std::size_t>(d) > last_at_depth.size())
            throw invalid_input("level sequence jumps more than one level");
        edges.push_back({last_at_depth[static_cast<std::size_t>(d - 1)], static_cast<vertex_t>(i)});
        last_at_depth.resize(static_cast<std::size_t>(d));
        last_at_depth.push_back(static_cast<vertex_t>(i));
    }
    return Graph::from_edges(static_cast<int>(levels.size()), edges);
}

std::string to_string(const LevelSequence& levels)
{
    std::string out;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(levels[i]);
    }
    return out;
}

namespace {

/// Beyer-Hedetniemi successor of a rooted level sequence, in place. When
/// `p` is negative the rightmost entry above depth 1 is used. Returns false
/// past the last sequence.
bool next_rooted_tree(LevelSequence& seq, int p = -1)
{
    if (p < 0) {
        p = static_cast<int>(seq.size()) - 1;
        while (p > 0 && seq[static_cast<std::size_t>(p)] == 1)
            --p;
    }
    if (p <= 0)
        return false;
    int q = p - 1;
    while (seq[static_cast<std::size_t>(q)] != seq[static_cast<std::size_t>(p)] - 1)
        --q;
    for (std::size_t i = static_cast<std::size_t>(p); i < seq.size(); ++i)
        seq[i] = seq[i - static_cast<std::size_t>(p) + static_cast<std::size_t>(q)];
    return true;
}

/// Index of the second child of the root (seq.size() when there is none).
std::size_t split_point(const LevelSequence& seq)
{
    bool one_found = false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] == 1) {
            if (one_found)
                return i;
            one_found = true;
        }
    }
    return seq.size();
}

} // namespace

FreeTreeGenerator::FreeTreeGenerator(int n)
    : n_(n)
{
    if (n < 1)
        throw invalid_parameter("tree generation needs n >= 1");
    // the path, rooted at its center
    for (int i = 0; i <= n / 2; ++i)
        layout_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i)
        layout_.push_back(i);
}

bool FreeTreeGenerator::advance_to_valid()
{
    // The free-tree conditions: the subtree of the root's first child (left)
    // is not higher than the rest, and if equally high it is not larger, and
    // if equally large it is not lexicographically greater.
    const std::size_t m = split_point(layout_);
    int left_height = 0;
    for (std::size_t i = 1; i < m; ++i)
        left_height = std::max(left_height, layout_[i] - 1);
    int rest_height = 0;
    for (std::size_t i = m; i < layout_.size(); ++i)
        rest_height = std::max(rest_height, layout_[i]);
    const std::size_t left_size = m - 1;
    const std::size_t rest_size = layout_.size() - m + 1;

    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left_size > rest_size) {
            valid = false;
        } else if (left_size == rest_size) {
            // compare left = layout[1..m) - 1 with rest = 0, layout[m..)
            for (std::size_t i = 0; i < left_size; ++i) {
                const int l = layout_[1 + i] - 1;
                const int r = i == 0 ? 0 : layout_[m + i - 1];
                if (l != r) {
                    valid = l < r;
                    break;
                }
            }
        }
    }
    if (valid)
        return true;

    const int p = static_cast<int>(left_size);
    const int old_at_p = layout_[static_cast<std::size_t>(p)];
    if (!next_rooted_tree(layout_, p))
        return false;
    if (old_at_p > 2) {
        const std::size_t new_m = split_point(layout_);
        int new_left_height = 0;
        for (std::size_t i = 1; i < new_m; ++i)
            new_left_height = std::max(new_left_height, layout_[i] - 1);
        const std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
        for (std::size_t j = 0; j < len; ++j)
            layout_[layout_.size() - len + j] = static_cast<int>(j) + 1;
    }
    return true;
}

const LevelSequence* FreeTreeGenerator::next()
{
    if (done_)
        return nullptr;
    if (n_ <= 2) {
        // single vertex and single edge have no successor
        if (started_) {
            done_ = true;
            return nullptr;
        }
        started_ = true;
        return &layout_;
    }
    if (started_ && !next_rooted_tree(layout_)) {
        done_ = true;
        return nullptr;
    }
    started_ = true;
    if (!advance_to_valid()) {
        done_ = true;
        return nullptr;
    }
    return &layout_;
}

std::uint64_t count_trees(int n)
{
    FreeTreeGenerator gen(n);
    std::uint64_t count = 0;
    while (gen.next())
        ++count;
    return count;
}

std::string identify_tree_family(const Graph& t)
{
    if (!is_tree(t))
        return {};
    const int n = t.order();
    const auto form = tree_canonical_form(t);
    if (form == tree_canonical_form(build_path(n)))
        return "path";
    if (form == tree_canonical_form(build_star(n)))
        return "star";
    for (int a = 2; n >= 4 && a <= n / 2; ++a)
        if (form == tree_canonical_form(build_double_star(n, a)))
            return "double_star(" + std::to_string(a) + "," + std::to_string(n - a) + ")";
    if (n >= 6 && form == tree_canonical_form(build_broom(n)))
        return "broom";
    return {};
}

namespace {

struct Candidate {
    LevelSequence levels;
    double lee;
};

/// Bounded best-first buffer under a strict total order, so that merging
/// buffers is independent of how the stream was split.
class CandidateBuffer {
public:
    CandidateBuffer(std::size_t capacity, bool descending)
        : capacity_(capacity), descending_(descending)
    {
    }

    bool before(const Candidate& x, const Candidate& y) const
    {
        if (x.lee != y.lee)
            return descending_ ? x.lee > y.lee : x.lee < y.lee;
        return x.levels < y.levels;
    }

    void offer(const Candidate& c)
    {
        if (capacity_ == 0)
            return;
        if (items_.size() == capacity_ && !before(c, items_.back()))
            return;
        auto pos = std::upper_bound(items_.begin(), items_.end(), c,
                                    [this](const Candidate& x, const Candidate& y) { return before(x, y); });
        items_.insert(pos, c);
        if (items_.size() > capacity_)
            items_.pop_back();
    }

    void merge(const CandidateBuffer& other)
    {
        for (const auto& c : other.items_)
            offer(c);
    }

    const std::vector<Candidate>& items() const { return items_; }

private:
    std::size_t capacity_;
    bool descending_;
    std::vector<Candidate> items_;
};

// Extra candidates kept past top_k / bottom_k so that near-ties straddling
// the cut can still be re-decided exactly.
constexpr std::size_t guard_candidates = 8;

bool close(double x, double y)
{
    return std::abs(x - y) < lee_margin_threshold * std::max(std::abs(x), std::abs(y));
}

/// Turns a float-ordered candidate list into ranked entries, re-deciding
/// runs of near-equal values on the exact route.
std::vector<RankedTree> resolve(const std::vector<Candidate>& sorted, std::size_t keep, bool descending,
                                std::uint64_t total, std::vector<AmbiguousPair>& ambiguous,
                                bool& boundary_unresolved)
{
    struct Work {
        Candidate c;
        PreciseReal precise;
        bool has_precise = false;
    };
    std::vector<Work> work;
    for (const auto& c : sorted)
        work.push_back({c, 0, false});

    // clusters of consecutive close values
    std::size_t i = 0;
    while (i < work.size()) {
        std::size_t j = i + 1;
        while (j < work.size() && close(work[j - 1].c.lee, work[j].c.lee))
            ++j;
        if (j - i > 1) {
            // trees outside the buffer can only join this cluster; that matters
            // when it reaches a kept entry or the one its margin is taken against
            if (j == work.size() && total > work.size() && i <= keep)
                boundary_unresolved = true;
            for (std::size_t k = i; k < j; ++k) {
                work[k].precise = lee_via_line_moments_precise(tree_from_level_sequence(work[k].c.levels),
                                                               exact_route_tol);
                work[k].has_precise = true;
            }
            std::stable_sort(work.begin() + static_cast<std::ptrdiff_t>(i), work.begin() + static_cast<std::ptrdiff_t>(j),
                             [descending](const Work& x, const Work& y) {
                                 return descending ? x.precise > y.precise : x.precise < y.precise;
                             });
        }
        i = j;
    }

    std::vector<RankedTree> out;
    const std::size_t limit = std::min(keep, work.size());
    for (std::size_t k = 0; k < limit; ++k) {
        RankedTree r;
        r.levels = work[k].c.levels;
        r.lee = work[k].c.lee;
        r.family = identify_tree_family(tree_from_level_sequence(r.levels));
        if (k + 1 < work.size()) {
            const auto& next = work[k + 1];
            const double dir = descending ? 1.0 : -1.0;
            if (work[k].has_precise && next.has_precise) {
                const int s = precise_lee_sign(work[k].precise, next.precise) * (descending ? 1 : -1);
                r.margin_to_next = static_cast<double>((work[k].precise - next.precise) * dir);
                r.order_sign = s;
                r.exact_decided = true;
                ambiguous.push_back({r.levels, next.c.levels, precise_lee_sign(work[k].precise, next.precise)});
            } else {
                r.margin_to_next = (r.lee - next.c.lee) * dir;
                r.order_sign = r.margin_to_next > 0 ? 1 : (r.margin_to_next < 0 ? -1 : 0);
            }
        } else {
            r.margin_to_next = 0;
            r.order_sign = 1;
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

TreeRanking rank_trees(int n, const RankOptions& options)
{
    if (n < 4)
        throw invalid_parameter("rank_trees needs n >= 4");
    if (options.top_k < 1 || options.bottom_k < 1)
        throw invalid_parameter("rank_trees needs top_k, bottom_k >= 1");
    const int threads = std::max(1, options.threads);
    const std::size_t chunk = std::max<std::size_t>(1, options.chunk_size);

    const std::size_t top_cap = static_cast<std::size_t>(options.top_k) + guard_candidates;
    const std::size_t bottom_cap = static_cast<std::size_t>(options.bottom_k) + guard_candidates;
    CandidateBuffer top(top_cap, true);
    CandidateBuffer bottom(bottom_cap, false);

    FreeTreeGenerator gen(n);
    std::uint64_t count = 0;
    std::vector<LevelSequence> batch;
    batch.reserve(chunk * static_cast<std::size_t>(threads));
    bool exhausted = false;

    while (!exhausted) {
        batch.clear();
        while (batch.size() < chunk * static_cast<std::size_t>(threads)) {
            const LevelSequence* seq = gen.next();
            if (!seq) {
                exhausted = true;
                break;
            }
            batch.push_back(*seq);
        }
        count += batch.size();
        if (batch.empty())
            break;

        std::vector<CandidateBuffer> local_top(static_cast<std::size_t>(threads), CandidateBuffer(top_cap, true));
        std::vector<CandidateBuffer> local_bottom(static_cast<std::size_t>(threads), CandidateBuffer(bottom_cap, false));
        auto work = [&](std::size_t worker) {
            for (std::size_t i = worker; i < batch.size(); i += static_cast<std::size_t>(threads)) {
                Candidate c{batch[i], laplacian_estrada_index(tree_from_level_sequence(batch[i]))};
                local_top[worker].offer(c);
                local_bottom[worker].offer(c);
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < static_cast<std::size_t>(threads); ++w)
                pool.emplace_back(work, w);
        }
        for (std::size_t w = 0; w < static_cast<std::size_t>(threads); ++w) {
            top.merge(local_top[w]);
            bottom.merge(local_bottom[w]);
        }
    }

    TreeRanking r;
    r.n = n;
    r.count = count;
    r.top = resolve(top.items(), static_cast<std::size_t>(options.top_k), true, count, r.ambiguous,
                    r.boundary_unresolved);
    r.bottom = resolve(bottom.items(), static_cast<std::size_t>(options.bottom_k), false, count, r.ambiguous,
                       r.boundary_unresolved);
    return r;
}

ExtremalReport verify_extremal(int n_max, int threads, int n_min)
{
    if (n_min < 5 || n_max < n_min)
        throw invalid_parameter("verify_extremal needs 5 <= n_min <= n_max");
    ExtremalReport report;
    report.n_max = n_max;
    for (int n = n_min; n <= n_max; ++n) {
        ExtremalCheck check;
        check.n = n;
        RankOptions opts;
        opts.top_k = 4;
        opts.bottom_k = 1;
        opts.threads = threads;
        check.ranking = rank_trees(n, opts);
        check.count = check.ranking.count;
        const auto& top = check.ranking.top;
        const auto& bottom = check.ranking.bottom;

        auto fail = [&](const std::string& msg) {
            check.ok = false;
            check.failures.push_back(msg);
        };
        auto expect_at = [&](const std::vector<RankedTree>& list, std::size_t pos, const std::string& family,
                             const std::string& role) {
            if (pos >= list.size()) {
                fail(role + ": missing");
                return;
            }
            const auto& entry = list[pos];
            if (entry.family != family)
                fail(role + ": expected " + family + ", found tree [" + to_string(entry.levels) + "]");
            else if (entry.order_sign <= 0)
                fail(role + ": " + family + " [" + to_string(entry.levels) + "] is not strictly separated from the next tree");
        };

        const std::string ds2 = "double_star(2," + std::to_string(n - 2) + ")";
        expect_at(bottom, 0, "path", "minimum");
        expect_at(top, 0, "star", "maximum");
        expect_at(top, 1, ds2, "second maximum");
        if (n >= 6) {
            expect_at(top, 2, "double_star(3," + std::to_string(n - 3) + ")", "third maximum");
            expect_at(top, 3, "broom", "fourth maximum");
        }
        if (check.ranking.boundary_unresolved)
            fail("near-tie at the edge of the candidate buffer");
        report.ok = report.ok && check.ok;
        report.per_n.push_back(std::move(check));
    }
    return report;
}

} // namespace estrada
