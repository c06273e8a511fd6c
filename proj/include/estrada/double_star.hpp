#pragma once

#include "estrada/graph.hpp"
#include "estrada/spectral.hpp"

#include <array>
#include <string>
#include <vector>

namespace estrada {

/// S_n(a, b) with a + b = n and 2 <= a <= floor(n/2).
class DoubleStarParams {
public:
    /// Throws invalid_parameter unless n >= 5 and 2 <= a <= n/2.
    DoubleStarParams(int n, int a);

    int n() const noexcept { return n_; }
    int a() const noexcept { return a_; }
    int b() const noexcept { return n_ - a_; }

    /// n = 5 lies below the range n > 5 used for the ordering argument. The
    /// spectrum formula still holds there.
    bool below_ordering_range() const noexcept { return n_ == 5; }

    /// a <= n/2 - 1, where the fixed root brackets are proved.
    bool has_fixed_brackets() const noexcept { return 2 * a_ <= n_ - 2; }

    /// Coefficients of the cubic factor x^3 + c2 x^2 + c1 x + c0, returned as
    /// {c0, c1, c2, 1}.
    std::array<long long, 4> cubic() const noexcept;

private:
    int n_;
    int a_;
};

/// Exact coefficients of the Laplacian characteristic polynomial
/// (-1)^n x (x-1)^(n-4) (x^3 - (n+2) x^2 + (n+2+ab) x - n), ascending powers.
std::vector<BigInt> char_poly_coeffs(const DoubleStarParams& p);

/// f(x) = x^3 - (n+2)x^2 + (n+2+a(n-a))x - n, exactly.
BigRational cubic_sign_probe(const DoubleStarParams& p, const BigRational& x);
double cubic_sign_probe(const DoubleStarParams& p, double x);

struct Interval {
    double lo = 0;
    double hi = 0;

    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

struct CubicRoots {
    double x1 = 0; // largest
    double x2 = 0;
    double x3 = 0; // smallest
    std::array<Interval, 3> brackets{}; // for x1, x2, x3
    bool fixed_brackets = false;        // true when the brackets are [n-a+1, n-a+3/2], [a, a+1], [0, 1]
};

/// Roots of the cubic factor to about 1e-12: bisection inside sign-checked
/// brackets, then Newton polish. Throws numerical_failure if a bracket does not
/// change sign.
CubicRoots cubic_roots(const DoubleStarParams& p);

/// 1 + (n-4) e + e^x1 + e^x2 + e^x3.
double lee_closed_form(const DoubleStarParams& p);

/// h(a) = 1 + e^a + e^(n-a+1) - e - e^(a+2) - e^(n-a+1/2).
double h_function(int n, double a);

struct OrderingStep {
    int a = 0;
    int b = 0;
    double lee = 0;
    double margin_to_next = 0; // lee(a) - lee(a+1); 0 for the last entry
    bool used_exact = false;
    int sign = 1;              // decided sign of lee(a) - lee(a+1)
};

struct DoubleStarOrderingReport {
    int n = 0;
    bool ok = true;
    bool below_ordering_range = false;
    std::vector<OrderingStep> chain;
    // LEE(S_n(2, n-2)) - LEE(S_n(floor(n/2), ceil(n/2))); only when floor(n/2) > 2
    bool special_case_applicable = false;
    double special_case_margin = 0;
    int special_case_sign = 1;
    std::vector<std::string> failures;
};

/// Checks LEE(S_n(2,n-2)) > LEE(S_n(3,n-3)) > ... > LEE(S_n(n/2, n - n/2))
/// and the direct comparison of the two ends. Close margins are re-decided
/// on the exact line-graph moment route. Failures are reported, not thrown.
DoubleStarOrderingReport verify_double_star_ordering(int n);

} // namespace estrada
