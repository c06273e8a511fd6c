#include "doctest.h"

#include "estrada/error.hpp"
#include "estrada/random.hpp"
#include "estrada/spectral.hpp"

#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace estrada;
using std::numbers::e;

namespace {

bool within(double a, double b, double tol)
{
    return std::abs(a - b) <= tol;
}

Graph random_connected_graph(SplitMix64& rng, int n, int extra_per_mille)
{
    auto edges = random_tree(rng, n).edges();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(1000) < static_cast<std::uint64_t>(extra_per_mille))
                edges.push_back({u, v});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("Laplacian and adjacency matrices")
{
    const auto l = laplacian_matrix(build_path(2));
    CHECK(l(0, 0) == 1);
    CHECK(l(0, 1) == -1);
    CHECK(l(1, 0) == -1);
    CHECK(l(1, 1) == 1);

    const auto a = adjacency_matrix(build_complete(2));
    CHECK(a(0, 0) == 0);
    CHECK(a(0, 1) == 1);
    CHECK(a(1, 0) == 1);

    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Graph g = random_graph(rng, rng.between(1, 12), 400);
        const auto lm = laplacian_matrix(g);
        for (int r = 0; r < g.order(); ++r) {
            double sum = 0;
            for (int c = 0; c < g.order(); ++c) {
                sum += lm(r, c);
                REQUIRE(lm(r, c) == lm(c, r));
            }
            REQUIRE(sum == 0.0);
        }
    }
}

TEST_CASE("eigenvalues of small matrices")
{
    CHECK(eigenvalues(SymmetricMatrix(3)).values == std::vector<double>{0, 0, 0});
    CHECK(eigenvalues(SymmetricMatrix(0)).values.empty());

    auto k3 = adjacency_spectrum(build_complete(3)).values;
    CHECK(within(k3[0], 2, 1e-12));
    CHECK(within(k3[1], -1, 1e-12));
    CHECK(within(k3[2], -1, 1e-12));

    auto p2 = adjacency_spectrum(build_path(2)).values;
    CHECK(within(p2[0], 1, 1e-12));
    CHECK(within(p2[1], -1, 1e-12));

    // P_3 Laplacian: det(L - x I) = -x (x - 1)(x - 3)
    auto p3 = laplacian_spectrum(build_path(3)).values;
    CHECK(within(p3[0], 3, 1e-12));
    CHECK(within(p3[1], 1, 1e-12));
    CHECK(within(p3[2], 0, 1e-12));

    auto s4 = laplacian_spectrum(build_star(4)).values;
    const auto s4_oracle = oracle::laplacian_eigenvalues(build_star(4));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(within(s4[i], s4_oracle[i], 1e-12));
    CHECK(within(s4[0], 4, 1e-12));
    CHECK(within(s4[1], 1, 1e-12));
    CHECK(within(s4[2], 1, 1e-12));
    CHECK(within(s4[3], 0, 1e-12));
}

TEST_CASE("path Laplacian spectrum matches 2 - 2cos(k pi / n)")
{
    for (int n = 2; n <= 30; ++n) {
        std::vector<double> expected;
        for (int k = n - 1; k >= 0; --k)
            expected.push_back(2 - 2 * std::cos(k * std::numbers::pi / n));
        const auto got = laplacian_spectrum(build_path(n)).values;
        for (std::size_t i = 0; i < got.size(); ++i)
            REQUIRE(within(got[i], expected[i], 1e-10));
    }
    const auto p4 = laplacian_spectrum(build_path(4)).values;
    CHECK(within(p4[0], 2 + std::sqrt(2.0), 1e-12));
    CHECK(within(p4[1], 2, 1e-12));
    CHECK(within(p4[2], 2 - std::sqrt(2.0), 1e-12));
    CHECK(within(p4[3], 0, 1e-12));
}

TEST_CASE("Jacobi agrees with a dense reference eigensolver")
{
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const int n = rng.between(1, 64);
        const Graph g = random_graph(rng, n, static_cast<int>(rng.between(20, 900)));
        for (bool lap : {false, true}) {
            const auto m = lap ? laplacian_matrix(g) : adjacency_matrix(g);
            const auto got = eigenvalues(m).values;
            const auto want = lap ? oracle::laplacian_eigenvalues(g) : oracle::adjacency_eigenvalues(g);
            const double tol = 1e-10 * std::max(1.0, m.frobenius_norm());
            for (std::size_t k = 0; k < got.size(); ++k)
                REQUIRE(within(got[k], want[k], tol));
        }
    }
}

TEST_CASE("eigensolver reports non-convergence instead of returning")
{
    SymmetricMatrix m(2);
    m.set(0, 1, std::numeric_limits<double>::quiet_NaN());
    CHECK_THROWS_AS(eigenvalues(m), numerical_failure);
}

TEST_CASE("spectrum invariants on random graphs")
{
    SplitMix64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        const int n = rng.between(1, 16);
        const Graph g = random_graph(rng, n, static_cast<int>(rng.between(0, 1000)));
        const auto mu = laplacian_spectrum(g).values;
        const auto lambda = adjacency_spectrum(g).values;
        REQUIRE(std::is_sorted(mu.rbegin(), mu.rend()));
        REQUIRE(std::is_sorted(lambda.rbegin(), lambda.rend()));
        REQUIRE(mu.back() >= -1e-9);
        REQUIRE(std::abs(mu.back()) <= 1e-9);
        double sum_mu = 0;
        double sum_lambda = 0;
        for (double x : mu)
            sum_mu += x;
        for (double x : lambda)
            sum_lambda += x;
        REQUIRE(within(sum_mu, 2.0 * static_cast<double>(g.size()), 1e-8));
        REQUIRE(within(sum_lambda, 0, 1e-8));
        if (is_bipartite(g))
            for (std::size_t k = 0; k < lambda.size(); ++k)
                REQUIRE(within(lambda[k] + lambda[lambda.size() - 1 - k], 0, 1e-8));
    }
}

TEST_CASE("connected graphs have exactly one zero Laplacian eigenvalue")
{
    SplitMix64 rng(13);
    for (int i = 0; i < 500; ++i) {
        const Graph g = random_connected_graph(rng, rng.between(1, 16), static_cast<int>(rng.between(0, 600)));
        const auto mu = laplacian_spectrum(g).values;
        int zeros = 0;
        for (double x : mu)
            zeros += std::abs(x) < 1e-8;
        REQUIRE(zeros == 1);
    }
}

TEST_CASE("Estrada index examples")
{
    CHECK(within(estrada_index(Graph::from_edges(5, {})), 5, 1e-12));
    CHECK(within(estrada_index(build_path(2)), e + 1 / e, 1e-12));
    CHECK(within(estrada_index(build_path(2)), 3.0861612696304874, 1e-12));
    CHECK(within(estrada_index(build_complete(3)), e * e + 2 / e, 1e-12));
    CHECK(within(estrada_index(build_complete(3)), 8.124814981273534, 1e-12));
}

TEST_CASE("Laplacian Estrada index examples")
{
    CHECK(within(laplacian_estrada_index(build_path(2)), 1 + e * e, 1e-12));
    CHECK(within(laplacian_estrada_index(build_path(3)), 23.80381875164671, 1e-11));
    CHECK(within(laplacian_estrada_index(build_star(4)), 61.03471369006232, 1e-11));
}

TEST_CASE("closed-walk moments")
{
    SplitMix64 rng(14);
    for (int i = 0; i < 200; ++i) {
        const int n = rng.between(0, 9);
        const Graph g = random_graph(rng, n, 500);
        const auto m = spectral_moments_walks(g, 8);
        REQUIRE(m.order() == 8);
        REQUIRE(m[0] == n);
        REQUIRE(m[1] == 0);
        REQUIRE(m[2] == 2 * g.size());
        for (int k = 0; k <= 8; ++k)
            REQUIRE(m[static_cast<std::size_t>(k)] == oracle::closed_walks(g, k));
        if (g.size() > 0)
            for (int k = 0; k <= 8; k += 2)
                REQUIRE(m[static_cast<std::size_t>(k)] > 0);
    }
    CHECK(spectral_moments_walks(build_complete(3), 3)[3] == 6);
    CHECK(spectral_moments_walks(build_path(3), 4)[4] == 8);
    CHECK(oracle::closed_walks(build_path(3), 4) == 8);
    CHECK_THROWS_AS(spectral_moments_walks(build_path(3), -1), invalid_parameter);
}

TEST_CASE("moments from the spectrum round to the walk counts")
{
    CHECK(within(spectral_moments_eigen(build_complete(3), 2)[2], 6, 1e-9));
    CHECK(within(spectral_moments_eigen(build_path(2), 5)[5], 0, 1e-12));
    const auto edgeless = spectral_moments_eigen(Graph::from_edges(4, {}), 6);
    CHECK(edgeless[0] == 4);
    for (std::size_t k = 1; k < edgeless.size(); ++k)
        CHECK(edgeless[k] == 0);

    SplitMix64 rng(15);
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(rng, rng.between(1, 10), static_cast<int>(rng.between(0, 1000)));
        const auto exact = spectral_moments_walks(g, 12);
        const auto approx = spectral_moments_eigen(g, 12);
        for (int k = 0; k <= 12; ++k) {
            const double x = approx[static_cast<std::size_t>(k)];
            REQUIRE(std::abs(x - std::round(x)) < 1e-6 * std::max(1.0, std::abs(x)));
            REQUIRE(BigInt(static_cast<long long>(std::llround(x))) == exact[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("Taylor truncation order is the first K meeting the tail bound")
{
    auto log_tail = [](int n, int r, int k) { return std::log(n) + (k + 1) * std::log(r) + r - std::lgamma(k + 2.0); };
    CHECK(taylor_truncation_order(Graph::from_edges(3, {}), 1e-10) == 0);
    for (const Graph& g : {build_path(2), build_complete(5), build_star(22), line_graph(build_star(22))}) {
        for (double tol : {1e-6, 1e-9, 1e-15}) {
            const int k = taylor_truncation_order(g, tol);
            CHECK(log_tail(g.order(), g.max_degree(), k) < std::log(tol));
            if (k > 0)
                CHECK(log_tail(g.order(), g.max_degree(), k - 1) >= std::log(tol));
        }
    }
    CHECK_THROWS_AS(taylor_truncation_order(build_path(2), 0), invalid_parameter);
}

TEST_CASE("Estrada index through the moment series")
{
    CHECK(estrada_via_moments(Graph::from_edges(3, {}), 1e-3) == 3);
    CHECK(within(estrada_via_moments(build_path(2), 1e-10), 2 * std::cosh(1.0), 1e-10));
    CHECK(within(estrada_via_moments(build_complete(3), 1e-10), e * e + 2 / e, 1e-10));

    SplitMix64 rng(16);
    for (int i = 0; i < 500; ++i) {
        const Graph g = random_graph(rng, rng.between(1, 12), static_cast<int>(rng.between(0, 1000)));
        REQUIRE(within(estrada_index(g), estrada_via_moments(g, 1e-9), 1e-8));
    }
}

TEST_CASE("line-graph identity")
{
    const auto p3 = check_line_graph_identity(build_path(3));
    CHECK(within(p3.lhs, 1 + e + e * e * e, 1e-11));
    CHECK(within(p3.rhs, 1 + e * e * (e + 1 / e), 1e-11));
    CHECK(p3.rel_err < 1e-10);
    CHECK(p3.n == 3);
    CHECK(p3.m == 2);

    const auto s5 = check_line_graph_identity(build_star(5));
    CHECK(within(s5.lhs, 1 + 3 * e + std::exp(5.0), 1e-10));
    CHECK(within(s5.rhs, 1 + e * e * (e * e * e + 3 / e), 1e-10));

    CHECK_THROWS_AS(check_line_graph_identity(build_complete(3)), precondition_violation);

    SplitMix64 rng(17);
    for (int i = 0; i < 200; ++i)
        REQUIRE(check_line_graph_identity(random_tree(rng, rng.between(1, 40))).rel_err < 1e-8);
    for (int n = 4; n <= 40; n += 2)
        REQUIRE(check_line_graph_identity(build_cycle(n)).rel_err < 1e-8);
}

TEST_CASE("LEE through line-graph moments")
{
    CHECK(within(lee_via_line_moments(build_path(2), 1e-12), 1 + e * e, 1e-9));
    CHECK(within(lee_via_line_moments(build_path(4), 1e-12), laplacian_estrada_index(build_path(4)), 1e-9));
    CHECK(within(lee_via_line_moments(build_path(4), 1e-12), 40.57849708602868, 1e-9));
    CHECK(within(lee_via_line_moments(build_star(6), 1e-12), 1 + 4 * e + std::exp(6.0), 1e-9));
    CHECK_THROWS_AS(lee_via_line_moments(build_cycle(5), 1e-9), precondition_violation);

    // star spectrum {n, 1^(n-2), 0} is known exactly, so the precise route
    // can be checked at full precision
    const PreciseReal exact = 1 + 20 * boost::multiprecision::exp(PreciseReal(1)) + boost::multiprecision::exp(PreciseReal(22));
    const PreciseReal got = lee_via_line_moments_precise(build_star(22), exact_route_tol);
    CHECK(boost::multiprecision::abs(got - exact) < 1e-13);
}

TEST_CASE("adding an edge never decreases a closed-walk count")
{
    SplitMix64 rng(18);
    for (int i = 0; i < 300; ++i) {
        const int n = rng.between(2, 8);
        const Graph g = random_graph(rng, n, static_cast<int>(rng.between(0, 800)));
        std::vector<Edge> missing;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v))
                    missing.push_back({u, v});
        if (missing.empty())
            continue;
        auto edges = g.edges();
        edges.push_back(missing[rng.below(missing.size())]);
        const Graph h = Graph::from_edges(n, edges);
        const auto before = spectral_moments_walks(g, 10);
        const auto after = spectral_moments_walks(h, 10);
        for (int k = 0; k <= 10; ++k)
            REQUIRE(after[static_cast<std::size_t>(k)] >= before[static_cast<std::size_t>(k)]);
        REQUIRE(after[2] > before[2]);
    }
}

TEST_CASE("LEE comparison falls back to the exact route on near ties")
{
    const auto far = compare_lee(build_star(6), build_path(6));
    CHECK(far.sign == 1);
    CHECK_FALSE(far.used_exact);

    // two labellings of the same tree: equal LEE, exact route reports a tie
    const std::vector<Edge> relabelled{{5, 4}, {4, 3}, {3, 2}, {2, 1}, {1, 0}, {2, 6}};
    const std::vector<Edge> original{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}};
    const auto tie = compare_lee(Graph::from_edges(7, relabelled), Graph::from_edges(7, original));
    CHECK(tie.used_exact);
    CHECK(tie.sign == 0);

    CHECK(precise_lee_sign(PreciseReal(2), PreciseReal(1)) == 1);
    CHECK(precise_lee_sign(PreciseReal(1), PreciseReal(2)) == -1);
    CHECK(precise_lee_sign(PreciseReal(1), PreciseReal(1) + PreciseReal(1e-20)) == 0);
}
