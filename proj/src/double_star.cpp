#include "estrada/double_star.hpp"

#include "estrada/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace estrada {

DoubleStarParams::DoubleStarParams(int n, int a)
    : n_(n), a_(a)
{
    if (n < 5)
        throw invalid_parameter("double star parameters need n >= 5, got " + std::to_string(n));
    if (a < 2 || a > n / 2)
        throw invalid_parameter("double star parameters need 2 <= a <= n/2, got a=" + std::to_string(a));
}

std::array<long long, 4> DoubleStarParams::cubic() const noexcept
{
    const long long n = n_;
    const long long ab = static_cast<long long>(a_) * (n_ - a_);
    return {-n, n + 2 + ab, -(n + 2), 1};
}

std::vector<BigInt> char_poly_coeffs(const DoubleStarParams& p)
{
    auto multiply = [](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
        std::vector<BigInt> z(x.size() + y.size() - 1);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                z[i + j] += x[i] * y[j];
        return z;
    };

    std::vector<BigInt> poly{0, 1}; // x
    const std::vector<BigInt> x_minus_one{-1, 1};
    for (int i = 0; i < p.n() - 4; ++i)
        poly = multiply(poly, x_minus_one);
    const auto c = p.cubic();
    poly = multiply(poly, {c[0], c[1], c[2], c[3]});
    if (p.n() % 2 != 0)
        for (auto& coeff : poly)
            coeff = -coeff;
    return poly;
}

BigRational cubic_sign_probe(const DoubleStarParams& p, const BigRational& x)
{
    const auto c = p.cubic();
    return ((x + c[2]) * x + c[1]) * x + c[0];
}

double cubic_sign_probe(const DoubleStarParams& p, double x)
{
    const auto c = p.cubic();
    return ((x + static_cast<double>(c[2])) * x + static_cast<double>(c[1])) * x + static_cast<double>(c[0]);
}

namespace {

int sign_of(const BigRational& x)
{
    return x.sign();
}

double cubic_derivative(const DoubleStarParams& p, double x)
{
    const auto c = p.cubic();
    return (3 * x + 2 * static_cast<double>(c[2])) * x + static_cast<double>(c[1]);
}

/// Root of f in [lo, hi] given f(lo), f(hi) of opposite sign (or one zero).
double refine_root(const DoubleStarParams& p, BigRational lo, BigRational hi)
{
    const int slo = sign_of(cubic_sign_probe(p, lo));
    const int shi = sign_of(cubic_sign_probe(p, hi));
    if (slo == 0)
        return static_cast<double>(lo);
    if (shi == 0)
        return static_cast<double>(hi);
    if (slo == shi)
        throw numerical_failure("cubic bracket endpoints have equal sign");

    double a = static_cast<double>(lo);
    double b = static_cast<double>(hi);
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b)
            break;
        const double fm = cubic_sign_probe(p, mid);
        if (fm == 0)
            return mid;
        if ((fm < 0) == (slo < 0))
            a = mid;
        else
            b = mid;
    }
    double x = 0.5 * (a + b);
    for (int it = 0; it < 3; ++it) {
        const double d = cubic_derivative(p, x);
        if (d == 0)
            break;
        const double next = x - cubic_sign_probe(p, x) / d;
        if (!(next >= static_cast<double>(lo) && next <= static_cast<double>(hi)))
            break;
        x = next;
    }
    return x;
}

struct RationalBracket {
    BigRational lo;
    BigRational hi;
};

/// Sign-change scan of f over [0, n+2] (which holds every root, by Vieta),
/// refining the grid until exactly three roots are isolated.
std::vector<RationalBracket> scan_brackets(const DoubleStarParams& p)
{
    const BigRational upper = p.n() + 2;
    for (int denom = 8; denom <= (1 << 20); denom *= 2) {
        std::vector<RationalBracket> found;
        BigRational last_x;
        int last_sign = 0;
        const long long steps = static_cast<long long>(p.n() + 2) * denom;
        for (long long i = 0; i <= steps; ++i) {
            const BigRational x(i, denom);
            const int s = sign_of(cubic_sign_probe(p, x));
            if (s == 0) {
                found.push_back({x, x});
                last_sign = 0;
                continue;
            }
            if (last_sign != 0 && s != last_sign)
                found.push_back({last_x, x});
            last_sign = s;
            last_x = x;
        }
        if (found.size() == 3)
            return found;
    }
    throw numerical_failure("could not isolate three roots of the double-star cubic");
}

} // namespace

CubicRoots cubic_roots(const DoubleStarParams& p)
{
    CubicRoots r;
    std::array<RationalBracket, 3> brackets; // x1, x2, x3
    if (p.has_fixed_brackets()) {
        const int n = p.n();
        const int a = p.a();
        brackets = {RationalBracket{BigRational(n - a + 1), BigRational(2 * (n - a) + 3, 2)},
                    RationalBracket{BigRational(a), BigRational(a + 1)},
                    RationalBracket{BigRational(0), BigRational(1)}};
        r.fixed_brackets = true;
    } else {
        auto found = scan_brackets(p); // ascending
        brackets = {found[2], found[1], found[0]};
    }
    const double x1 = refine_root(p, brackets[0].lo, brackets[0].hi);
    const double x2 = refine_root(p, brackets[1].lo, brackets[1].hi);
    const double x3 = refine_root(p, brackets[2].lo, brackets[2].hi);
    r.x1 = x1;
    r.x2 = x2;
    r.x3 = x3;
    for (std::size_t i = 0; i < 3; ++i)
        r.brackets[i] = {static_cast<double>(brackets[i].lo), static_cast<double>(brackets[i].hi)};
    if (!(x1 >= x2 && x2 >= x3 && x3 > 0))
        throw numerical_failure("double-star cubic roots out of order");
    return r;
}

double lee_closed_form(const DoubleStarParams& p)
{
    const auto roots = cubic_roots(p);
    return 1.0 + (p.n() - 4) * std::numbers::e + std::exp(roots.x3) + std::exp(roots.x2) + std::exp(roots.x1);
}

double h_function(int n, double a)
{
    using std::exp;
    return 1.0 + exp(a) + exp(n - a + 1) - std::numbers::e - exp(a + 2) - exp(n - a + 0.5);
}

namespace {

struct Decision {
    int sign;
    bool exact;
};

Decision decide(int n, int a_left, double lee_left, int a_right, double lee_right)
{
    const double scale = std::max(std::abs(lee_left), std::abs(lee_right));
    if (std::abs(lee_left - lee_right) >= lee_margin_threshold * scale)
        return {lee_left > lee_right ? 1 : -1, false};
    const auto left = lee_via_line_moments_precise(build_double_star(n, a_left), exact_route_tol);
    const auto right = lee_via_line_moments_precise(build_double_star(n, a_right), exact_route_tol);
    return {precise_lee_sign(left, right), true};
}

} // namespace

DoubleStarOrderingReport verify_double_star_ordering(int n)
{
    if (n < 5)
        throw invalid_parameter("double-star ordering needs n >= 5");
    DoubleStarOrderingReport report;
    report.n = n;
    report.below_ordering_range = (n == 5);

    for (int a = 2; a <= n / 2; ++a) {
        const DoubleStarParams p(n, a);
        report.chain.push_back({a, n - a, lee_closed_form(p), 0.0, false, 1});
    }
    for (std::size_t i = 0; i + 1 < report.chain.size(); ++i) {
        auto& cur = report.chain[i];
        const auto& next = report.chain[i + 1];
        cur.margin_to_next = cur.lee - next.lee;
        const auto d = decide(n, cur.a, cur.lee, next.a, next.lee);
        cur.sign = d.sign;
        cur.used_exact = d.exact;
        if (d.sign <= 0) {
            report.ok = false;
            report.failures.push_back("LEE(S_" + std::to_string(n) + "(" + std::to_string(cur.a) + "," +
                                      std::to_string(cur.b) + ")) is not above LEE(S_" + std::to_string(n) + "(" +
                                      std::to_string(next.a) + "," + std::to_string(next.b) + "))");
        }
    }
    if (report.chain.size() >= 2) {
        const auto& first = report.chain.front();
        const auto& last = report.chain.back();
        report.special_case_applicable = true;
        report.special_case_margin = first.lee - last.lee;
        const auto d = decide(n, first.a, first.lee, last.a, last.lee);
        report.special_case_sign = d.sign;
        if (d.sign <= 0) {
            report.ok = false;
            report.failures.push_back("special case: LEE(S_n(2,n-2)) is not above LEE(S_n(floor(n/2),ceil(n/2)))");
        }
    }
    return report;
}

} // namespace estrada
