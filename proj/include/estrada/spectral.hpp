#pragma once

#include "estrada/graph.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace estrada {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
/// 50 decimal digits; used where the double eigen route cannot separate two
/// values.
using PreciseReal = boost::multiprecision::cpp_bin_float_50;

/// Dense symmetric matrix. Symmetry holds by construction: every write
/// updates both triangles.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order);

    int order() const noexcept { return order_; }
    double operator()(int i, int j) const { return data_[index(i, j)]; }
    void set(int i, int j, double value);

    double frobenius_norm() const;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j);
    }

    int order_;
    std::vector<double> data_;
};

enum class SpectrumKind { generic, adjacency, laplacian };

struct Spectrum {
    std::vector<double> values; // descending
    SpectrumKind kind = SpectrumKind::generic;
};

SymmetricMatrix adjacency_matrix(const Graph& g);

/// L = D - A.
SymmetricMatrix laplacian_matrix(const Graph& g);

/// Cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops below
/// 1e-13 * max(1, ||M||_F). Throws numerical_failure after 100 sweeps.
Spectrum eigenvalues(const SymmetricMatrix& m, SpectrumKind kind = SpectrumKind::generic);

Spectrum adjacency_spectrum(const Graph& g);
Spectrum laplacian_spectrum(const Graph& g);

/// EE(G) = sum exp(lambda_i) over the adjacency spectrum.
double estrada_index(const Graph& g);

/// LEE(G) = sum exp(mu_i) over the Laplacian spectrum.
double laplacian_estrada_index(const Graph& g);

/// Exact closed-walk counts M_0..M_K, M_k = trace(A^k).
struct MomentSequence {
    std::vector<BigInt> counts;

    int order() const noexcept { return static_cast<int>(counts.size()) - 1; }
    const BigInt& operator[](std::size_t k) const { return counts[k]; }
};

MomentSequence spectral_moments_walks(const Graph& g, int max_order);

/// sum lambda_i^k from the computed adjacency spectrum, k = 0..max_order.
std::vector<double> spectral_moments_eigen(const Graph& g, int max_order);

/// Smallest K with  n * r^(K+1) * e^r / (K+1)! < tol,  where r is the
/// maximum degree of g (an upper bound on the spectral radius). The bound
/// dominates the tail of sum_k M_k / k! past K.
int taylor_truncation_order(const Graph& g, double tol);

/// EE from the exact moment series truncated at taylor_truncation_order.
double estrada_via_moments(const Graph& g, double tol);
PreciseReal estrada_via_moments_precise(const Graph& g, double tol);

struct IdentityReport {
    int n = 0;
    std::size_t m = 0;
    double lhs = 0;
    double rhs = 0;
    double abs_err = 0;
    double rel_err = 0;
};

/// Compares LEE(G) with n - m + e^2 * EE(L(G)). Requires bipartite g.
IdentityReport check_line_graph_identity(const Graph& g);

/// LEE through the line graph: n - m + e^2 * sum_{k<=K} M_k(L(G)) / k!,
/// with exact integer moments. Requires bipartite g.
double lee_via_line_moments(const Graph& g, double tol);
PreciseReal lee_via_line_moments_precise(const Graph& g, double tol);

/// Relative margin below which the double eigen route is not trusted to
/// order two LEE values.
inline constexpr double lee_margin_threshold = 1e-6;

/// Series tolerance for the exact route when it re-decides a comparison.
inline constexpr double exact_route_tol = 1e-15;

struct LeeComparison {
    int sign = 0;          // sign of LEE(a) - LEE(b); 0 only for an unresolved tie
    double lee_a = 0;
    double lee_b = 0;
    bool used_exact = false;
};

/// Orders two bipartite graphs by LEE. The eigen route decides when the
/// relative margin is at least lee_margin_threshold; otherwise both values
/// are recomputed through lee_via_line_moments_precise.
LeeComparison compare_lee(const Graph& a, const Graph& b);

/// Decides the sign of x - y for two precise LEE values whose series tails
/// are each bounded by exact_route_tol * e^2. Returns 0 when the difference
/// is within the combined tail bound.
int precise_lee_sign(const PreciseReal& x, const PreciseReal& y);

} // namespace estrada
