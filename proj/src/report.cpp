#include "estrada/report.hpp"

#include "estrada/error.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace estrada {

namespace {

json level_json(const LevelSequence& levels)
{
    return to_string(levels);
}

json ranked_json(const RankedTree& t)
{
    return {{"levelseq", level_json(t.levels)},
            {"lee", t.lee},
            {"family", t.family},
            {"margin_to_next", t.margin_to_next},
            {"order_sign", t.order_sign},
            {"exact", t.exact_decided}};
}

json big_json(const BigInt& x)
{
    if (x <= std::numeric_limits<long long>::max() && x >= std::numeric_limits<long long>::min())
        return x.convert_to<long long>();
    return x.str();
}

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

json to_json(const IdentityReport& r)
{
    return {{"n", r.n}, {"m", r.m}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"abs_err", r.abs_err}, {"rel_err", r.rel_err}};
}

json to_json(const IdentitySweepReport& r)
{
    json trees = json::array();
    for (const auto& t : r.trees)
        trees.push_back(to_json(t));
    json cycles = json::array();
    for (const auto& c : r.cycles)
        cycles.push_back(to_json(c));
    return {{"command", "verify-identity"},
            {"seed", r.options.seed},
            {"samples", r.options.samples},
            {"n_min", r.options.n_min},
            {"n_max", r.options.n_max},
            {"cycles_up_to", r.options.cycles_up_to},
            {"tolerance", r.options.tolerance},
            {"ok", r.ok},
            {"failures", r.failures},
            {"max_rel_err", r.max_rel_err},
            {"trees", trees},
            {"cycles", cycles}};
}

json to_json(const SigmaSweepReport& r)
{
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"n", s.n},
                           {"m", s.m},
                           {"v", s.v},
                           {"u", s.u},
                           {"p", s.p},
                           {"lee_before", s.lee_before},
                           {"lee_after", s.lee_after},
                           {"exact", s.used_exact},
                           {"sign", s.sign}});
    json moments = json::array();
    for (const auto& m : r.moment_samples)
        moments.push_back({{"n", m.n}, {"v", m.v}, {"dominated", m.dominated}, {"first_strict_k", m.first_strict_k}});
    return {{"command", "verify-sigma"},
            {"seed", r.options.seed},
            {"samples", r.options.samples},
            {"n_min", r.options.n_min},
            {"n_max", r.options.n_max},
            {"extra_edges", r.options.extra_edges},
            {"moment_samples", r.options.moment_samples},
            {"moment_n_max", r.options.moment_n_max},
            {"moment_order", r.options.moment_order},
            {"ok", r.ok},
            {"strict_increases", r.strict_increases},
            {"min_relative_margin", r.min_relative_margin},
            {"moment_failures", r.moment_failures},
            {"pairs", samples},
            {"moment_pairs", moments}};
}

json to_json(const TreeRanking& r)
{
    json top = json::array();
    for (const auto& t : r.top)
        top.push_back(ranked_json(t));
    json bottom = json::array();
    for (const auto& t : r.bottom)
        bottom.push_back(ranked_json(t));
    json ambiguous = json::array();
    for (const auto& a : r.ambiguous)
        ambiguous.push_back({{"first", level_json(a.first)}, {"second", level_json(a.second)}, {"sign", a.sign}});
    return {{"n", r.n},
            {"count", r.count},
            {"top", top},
            {"bottom", bottom},
            {"ambiguous", ambiguous},
            {"boundary_unresolved", r.boundary_unresolved}};
}

json to_json(const ExtremalReport& r)
{
    json results = json::array();
    for (const auto& c : r.per_n)
        results.push_back({{"n", c.n}, {"count", c.count}, {"ok", c.ok}, {"failures", c.failures}, {"ranking", to_json(c.ranking)}});
    return {{"command", "verify-extremal"}, {"n_max", r.n_max}, {"ok", r.ok}, {"results", results}};
}

json to_json(const DoubleStarOrderingReport& r)
{
    json chain = json::array();
    for (const auto& s : r.chain)
        chain.push_back({{"a", s.a}, {"b", s.b}, {"lee", s.lee}, {"margin_to_next", s.margin_to_next}, {"sign", s.sign}, {"exact", s.used_exact}});
    json out = {{"n", r.n}, {"ok", r.ok}, {"below_ordering_range", r.below_ordering_range}, {"chain", chain}};
    if (r.special_case_applicable)
        out["special_case"] = {{"margin", r.special_case_margin}, {"sign", r.special_case_sign}};
    out["failures"] = r.failures;
    return out;
}

json to_json(const MomentSequence& m)
{
    json out = json::array();
    for (const auto& c : m.counts)
        out.push_back(big_json(c));
    return out;
}

json compute_report(const Graph& g, int moment_order)
{
    const auto adjacency = adjacency_spectrum(g);
    const auto laplacian = laplacian_spectrum(g);
    double ee = 0;
    for (auto it = adjacency.values.rbegin(); it != adjacency.values.rend(); ++it)
        ee += std::exp(*it);
    double lee = 0;
    for (auto it = laplacian.values.rbegin(); it != laplacian.values.rend(); ++it)
        lee += std::exp(*it);
    return {{"n", g.order()},
            {"m", g.size()},
            {"adjacency_spectrum", adjacency.values},
            {"laplacian_spectrum", laplacian.values},
            {"estrada_index", ee},
            {"laplacian_estrada_index", lee},
            {"moments", to_json(spectral_moments_walks(g, moment_order))}};
}

std::string double_star_table_csv(int n_min, int n_max)
{
    if (n_min < 5 || n_max < n_min)
        throw invalid_parameter("double-star table needs 5 <= n_min <= n_max");
    std::string out = "n,a,b,x1,x2,x3,lee_closed_form,margin_to_next\n";
    for (int n = n_min; n <= n_max; ++n) {
        for (int a = 2; a <= n / 2; ++a) {
            const DoubleStarParams p(n, a);
            const auto roots = cubic_roots(p);
            const double lee = lee_closed_form(p);
            std::string margin;
            if (a < n / 2)
                margin = fmt17(lee - lee_closed_form(DoubleStarParams(n, a + 1)));
            out += std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(n - a) + "," + fmt17(roots.x1) +
                   "," + fmt17(roots.x2) + "," + fmt17(roots.x3) + "," + fmt17(lee) + "," + margin + "\n";
        }
    }
    return out;
}

} // namespace estrada
