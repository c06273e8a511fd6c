#include "estrada/verify.hpp"

#include "estrada/error.hpp"
#include "estrada/random.hpp"
#include "estrada/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace estrada {

IdentitySweepReport verify_identity(const IdentitySweepOptions& options)
{
    if (options.samples < 0 || options.n_min < 1 || options.n_max < options.n_min)
        throw invalid_parameter("verify_identity: bad sample range");
    IdentitySweepReport report;
    report.options = options;
    SplitMix64 rng(options.seed);

    auto record = [&](const IdentityReport& r) {
        report.max_rel_err = std::max(report.max_rel_err, r.rel_err);
        if (!(r.rel_err < options.tolerance)) {
            ++report.failures;
            report.ok = false;
        }
    };
    for (int i = 0; i < options.samples; ++i) {
        const int n = rng.between(options.n_min, options.n_max);
        report.trees.push_back(check_line_graph_identity(random_tree(rng, n)));
        record(report.trees.back());
    }
    for (int n = 4; n <= options.cycles_up_to; n += 2) {
        report.cycles.push_back(check_line_graph_identity(build_cycle(n)));
        record(report.cycles.back());
    }
    return report;
}

namespace {

Graph draw_sample(SplitMix64& rng, int n_min, int n_max, int extra)
{
    const int n = rng.between(n_min, n_max);
    return extra > 0 ? random_bipartite_graph(rng, n, extra) : random_tree(rng, n);
}

} // namespace

SigmaSweepReport verify_sigma(const SigmaSweepOptions& options)
{
    if (options.samples < 0 || options.n_min < 4 || options.n_max < options.n_min)
        throw invalid_parameter("verify_sigma: bad sample range (needs 4 <= n_min <= n_max)");
    if (options.moment_samples > 0 && options.moment_n_max < options.n_min)
        throw invalid_parameter("verify_sigma: moment_n_max below n_min");

    SigmaSweepReport report;
    report.options = options;
    report.min_relative_margin = std::numeric_limits<double>::infinity();
    SplitMix64 rng(options.seed);

    while (static_cast<int>(report.samples.size()) < options.samples) {
        const Graph g = draw_sample(rng, options.n_min, options.n_max, options.extra_edges);
        const auto sites = find_sigma_sites(g);
        if (sites.empty())
            continue; // a star; draw again
        const auto& site = sites[rng.below(sites.size())];
        const Graph h = sigma_transform(g, site);
        const auto cmp = compare_lee(h, g);

        SigmaSample s;
        s.n = g.order();
        s.m = g.size();
        s.v = site.v;
        s.u = site.u;
        s.p = static_cast<int>(site.pendants.size());
        s.lee_before = cmp.lee_b;
        s.lee_after = cmp.lee_a;
        s.used_exact = cmp.used_exact;
        s.sign = cmp.sign;
        if (s.sign > 0)
            ++report.strict_increases;
        else
            report.ok = false;
        report.min_relative_margin =
            std::min(report.min_relative_margin, (s.lee_after - s.lee_before) / std::max(s.lee_after, s.lee_before));
        report.samples.push_back(s);
    }
    if (report.samples.empty())
        report.min_relative_margin = 0;

    while (static_cast<int>(report.moment_samples.size()) < options.moment_samples) {
        const Graph g = draw_sample(rng, options.n_min, options.moment_n_max, options.extra_edges);
        const auto sites = find_sigma_sites(g);
        if (sites.empty())
            continue;
        const auto& site = sites[rng.below(sites.size())];
        const Graph h = sigma_transform(g, site);
        const auto before = spectral_moments_walks(line_graph(g), options.moment_order);
        const auto after = spectral_moments_walks(line_graph(h), options.moment_order);

        MomentSample ms;
        ms.n = g.order();
        ms.v = site.v;
        for (int k = 0; k <= options.moment_order; ++k) {
            const auto& b = before[static_cast<std::size_t>(k)];
            const auto& a = after[static_cast<std::size_t>(k)];
            if (a < b)
                ms.dominated = false;
            else if (a > b && ms.first_strict_k < 0)
                ms.first_strict_k = k;
        }
        if (!ms.dominated || ms.first_strict_k < 0) {
            ++report.moment_failures;
            report.ok = false;
        }
        report.moment_samples.push_back(ms);
    }
    return report;
}

} // namespace estrada
