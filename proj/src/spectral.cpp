#include "estrada/spectral.hpp"

#include "estrada/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace estrada {

SymmetricMatrix::SymmetricMatrix(int order)
    : order_(order)
{
    if (order < 0)
        throw invalid_parameter("negative matrix order");
    data_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0);
}

void SymmetricMatrix::set(int i, int j, double value)
{
    data_[index(i, j)] = value;
    data_[index(j, i)] = value;
}

double SymmetricMatrix::frobenius_norm() const
{
    double sum = 0;
    for (double x : data_)
        sum += x * x;
    return std::sqrt(sum);
}

SymmetricMatrix adjacency_matrix(const Graph& g)
{
    SymmetricMatrix a(g.order());
    for (const Edge& e : g.edges())
        a.set(e.u, e.v, 1.0);
    return a;
}

SymmetricMatrix laplacian_matrix(const Graph& g)
{
    SymmetricMatrix l(g.order());
    for (vertex_t v = 0; v < g.order(); ++v)
        l.set(v, v, static_cast<double>(g.degree(v)));
    for (const Edge& e : g.edges())
        l.set(e.u, e.v, -1.0);
    return l;
}

Spectrum eigenvalues(const SymmetricMatrix& m, SpectrumKind kind)
{
    constexpr int sweep_budget = 100;
    const int n = m.order();
    const auto un = static_cast<std::size_t>(n);
    std::vector<double> a(un * un);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = m(i, j);
    auto at = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)];
    };

    for (double x : a)
        if (!std::isfinite(x))
            throw numerical_failure("eigenvalues: matrix has a non-finite entry");
    const double threshold = 1e-13 * std::max(1.0, m.frobenius_norm());
    auto off_norm = [&] {
        double sum = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                sum += 2 * at(i, j) * at(i, j);
        return std::sqrt(sum);
    };

    bool converged = false;
    for (int sweep = 0; sweep <= sweep_budget; ++sweep) {
        if (off_norm() < threshold) {
            converged = true;
            break;
        }
        if (sweep == sweep_budget)
            break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1 / std::hypot(t, 1.0);
                const double s = t * c;
                const double tau = s / (1 + c);
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    const double new_kp = akp - s * (akq + tau * akp);
                    const double new_kq = akq + s * (akp - tau * akq);
                    at(k, p) = at(p, k) = new_kp;
                    at(k, q) = at(q, k) = new_kq;
                }
            }
        }
    }
    if (!converged)
        throw numerical_failure("Jacobi eigensolver did not converge within " + std::to_string(sweep_budget) +
                                " sweeps");

    Spectrum out;
    out.kind = kind;
    out.values.resize(un);
    for (int i = 0; i < n; ++i)
        out.values[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

Spectrum adjacency_spectrum(const Graph& g)
{
    return eigenvalues(adjacency_matrix(g), SpectrumKind::adjacency);
}

Spectrum laplacian_spectrum(const Graph& g)
{
    return eigenvalues(laplacian_matrix(g), SpectrumKind::laplacian);
}

namespace {

double exp_sum(const Spectrum& s)
{
    // ascending order keeps the small terms from being swallowed
    double sum = 0;
    for (auto it = s.values.rbegin(); it != s.values.rend(); ++it)
        sum += std::exp(*it);
    return sum;
}

} // namespace

double estrada_index(const Graph& g)
{
    return exp_sum(adjacency_spectrum(g));
}

double laplacian_estrada_index(const Graph& g)
{
    return exp_sum(laplacian_spectrum(g));
}

MomentSequence spectral_moments_walks(const Graph& g, int max_order)
{
    if (max_order < 0)
        throw invalid_parameter("moment order must be nonnegative");
    const int n = g.order();
    const auto un = static_cast<std::size_t>(n);

    // P_j = A^j. Symmetry gives M_2j = <P_j, P_j> and M_2j+1 = <P_j, P_j+1>
    // (Frobenius inner products), so only half the powers are needed.
    using Dense = std::vector<BigInt>;
    auto multiply_by_adjacency = [&](const Dense& x) {
        Dense y(un * un);
        for (int i = 0; i < n; ++i)
            for (vertex_t l : g.neighbors(i))
                for (std::size_t j = 0; j < un; ++j)
                    y[static_cast<std::size_t>(i) * un + j] += x[static_cast<std::size_t>(l) * un + j];
        return y;
    };
    auto inner = [](const Dense& x, const Dense& y) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero() && !y[i].is_zero())
                sum += x[i] * y[i];
        return sum;
    };

    MomentSequence out;
    out.counts.resize(static_cast<std::size_t>(max_order) + 1);
    Dense current(un * un);
    for (std::size_t i = 0; i < un; ++i)
        current[i * un + i] = 1;
    for (int j = 0; 2 * j <= max_order; ++j) {
        out.counts[static_cast<std::size_t>(2 * j)] = inner(current, current);
        if (2 * j + 1 > max_order)
            break;
        Dense next = multiply_by_adjacency(current);
        out.counts[static_cast<std::size_t>(2 * j + 1)] = inner(current, next);
        current = std::move(next);
    }
    return out;
}

std::vector<double> spectral_moments_eigen(const Graph& g, int max_order)
{
    if (max_order < 0)
        throw invalid_parameter("moment order must be nonnegative");
    const auto spectrum = adjacency_spectrum(g);
    std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
    for (double lambda : spectrum.values) {
        double power = 1;
        for (int k = 0; k <= max_order; ++k) {
            out[static_cast<std::size_t>(k)] += power;
            power *= lambda;
        }
    }
    return out;
}

int taylor_truncation_order(const Graph& g, double tol)
{
    if (!(tol > 0))
        throw invalid_parameter("tolerance must be positive");
    const int n = g.order();
    const int r = g.max_degree();
    if (n == 0 || r == 0)
        return 0;
    const double log_n = std::log(static_cast<double>(n));
    const double log_r = std::log(static_cast<double>(r));
    const double log_tol = std::log(tol);
    for (int k = 0;; ++k) {
        const double log_tail = log_n + (k + 1) * log_r + r - std::lgamma(k + 2.0);
        if (log_tail < log_tol)
            return k;
    }
}

PreciseReal estrada_via_moments_precise(const Graph& g, double tol)
{
    const int order = taylor_truncation_order(g, tol);
    const auto moments = spectral_moments_walks(g, order);
    PreciseReal sum = 0;
    BigInt factorial = 1;
    for (int k = 0; k <= order; ++k) {
        if (k > 0)
            factorial *= k;
        sum += static_cast<PreciseReal>(BigRational(moments[static_cast<std::size_t>(k)], factorial));
    }
    return sum;
}

double estrada_via_moments(const Graph& g, double tol)
{
    return static_cast<double>(estrada_via_moments_precise(g, tol));
}

namespace {

void require_bipartite(const Graph& g, const char* who)
{
    if (!is_bipartite(g))
        throw precondition_violation(std::string(who) + ": graph is not bipartite");
}

} // namespace

IdentityReport check_line_graph_identity(const Graph& g)
{
    require_bipartite(g, "check_line_graph_identity");
    IdentityReport r;
    r.n = g.order();
    r.m = g.size();
    r.lhs = laplacian_estrada_index(g);
    const double e2 = std::exp(2.0);
    r.rhs = static_cast<double>(r.n) - static_cast<double>(r.m) + e2 * estrada_index(line_graph(g));
    r.abs_err = std::abs(r.lhs - r.rhs);
    r.rel_err = r.lhs != 0 ? r.abs_err / std::abs(r.lhs) : r.abs_err;
    return r;
}

PreciseReal lee_via_line_moments_precise(const Graph& g, double tol)
{
    require_bipartite(g, "lee_via_line_moments");
    const PreciseReal e2 = boost::multiprecision::exp(PreciseReal(2));
    const PreciseReal base = PreciseReal(g.order()) - PreciseReal(g.size());
    return base + e2 * estrada_via_moments_precise(line_graph(g), tol);
}

double lee_via_line_moments(const Graph& g, double tol)
{
    return static_cast<double>(lee_via_line_moments_precise(g, tol));
}

int precise_lee_sign(const PreciseReal& x, const PreciseReal& y)
{
    const PreciseReal bound = 2 * exact_route_tol * std::exp(2.0);
    const PreciseReal diff = x - y;
    if (boost::multiprecision::abs(diff) <= bound)
        return 0;
    return diff > 0 ? 1 : -1;
}

LeeComparison compare_lee(const Graph& a, const Graph& b)
{
    LeeComparison c;
    c.lee_a = laplacian_estrada_index(a);
    c.lee_b = laplacian_estrada_index(b);
    const double scale = std::max(std::abs(c.lee_a), std::abs(c.lee_b));
    if (std::abs(c.lee_a - c.lee_b) >= lee_margin_threshold * scale) {
        c.sign = c.lee_a > c.lee_b ? 1 : -1;
        return c;
    }
    c.used_exact = true;
    c.sign = precise_lee_sign(lee_via_line_moments_precise(a, exact_route_tol),
                              lee_via_line_moments_precise(b, exact_route_tol));
    return c;
}

} // namespace estrada
