#pragma once

#include "estrada/spectral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace estrada {

struct IdentitySweepOptions {
    std::uint64_t seed = 42;
    int samples = 200;
    int n_min = 4;
    int n_max = 40;
    /// Even cycles C_4, C_6, ..., up to this length are checked as well; 0
    /// skips them.
    int cycles_up_to = 40;
    double tolerance = 1e-8;
};

struct IdentitySweepReport {
    IdentitySweepOptions options;
    std::vector<IdentityReport> trees;
    std::vector<IdentityReport> cycles;
    double max_rel_err = 0;
    int failures = 0;
    bool ok = true;
};

/// LEE(G) = n - m + e^2 EE(L(G)) on seeded random trees and even cycles.
IdentitySweepReport verify_identity(const IdentitySweepOptions& options);

struct SigmaSweepOptions {
    std::uint64_t seed = 42;
    int samples = 500;
    int n_min = 4;
    int n_max = 20;
    /// Extra edges added between colour classes; 0 keeps the samples trees.
    int extra_edges = 0;
    int moment_samples = 100;
    int moment_n_max = 10;
    int moment_order = 10;
};

struct SigmaSample {
    int n = 0;
    std::size_t m = 0;
    int v = 0;
    int u = 0;
    int p = 0;
    double lee_before = 0;
    double lee_after = 0;
    bool used_exact = false;
    int sign = 0; // sign of LEE(after) - LEE(before)
};

struct MomentSample {
    int n = 0;
    int v = 0;
    bool dominated = true;   // M_k(L(G')) >= M_k(L(G)) for every k checked
    int first_strict_k = -1; // smallest k with strict inequality
};

struct SigmaSweepReport {
    SigmaSweepOptions options;
    std::vector<SigmaSample> samples;
    std::vector<MomentSample> moment_samples;
    int strict_increases = 0;
    double min_relative_margin = 0;
    int moment_failures = 0;
    bool ok = true;
};

/// Applies a random sigma transformation to seeded random trees (or
/// bipartite graphs) and checks that LEE strictly increases; then checks
/// exact closed-walk domination of the line graphs on smaller samples.
SigmaSweepReport verify_sigma(const SigmaSweepOptions& options);

} // namespace estrada
