#pragma once

#include <algorithm>
#include <chrono>
#include <vector>

#include "acfp/attack.hpp"
#include "acfp/codegen.hpp"
#include "acfp/trace.hpp"

namespace acfp {

struct BenchPoint {
    int M = 0;
    double median_us = 0.0;
};

struct BenchReport {
    int n = 0;
    int t = 0;
    int attacks = 0;
    int reps = 0;
    std::uint64_t seed = 0;
    std::vector<BenchPoint> points;
    double max_doubling_factor = 0.0;  // worst median ratio between consecutive sizes
};

/// Trend benchmark for the soft trace: random codes passing has_udc(t) at a
/// fixed length, growing M, median per-attack wall time. Tracing work is
/// linear in M per iteration, so doubling M should roughly double the time.
inline BenchReport bench_soft_trace(const std::vector<int>& sizes, int n, int t, int attacks,
                                    int reps, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    std::mt19937_64 rng(seed);
    BenchReport report;
    report.n = n;
    report.t = t;
    report.attacks = attacks;
    report.reps = reps;
    report.seed = seed;

    for (int M : sizes) {
        const Code code = random_udc_code(n, M, 2, t, rng);
        std::uniform_int_distribution<int> pick(1, M);
        std::vector<double> times_us;
        times_us.reserve(static_cast<std::size_t>(attacks));
        for (int a = 0; a < attacks; ++a) {
            IndexSet colluders;
            while (static_cast<int>(colluders.size()) < t) colluders.insert(pick(rng));
            const GeneratedWord x = averaging_attack(code, colluders);
            double best = 1e18;
            for (int r = 0; r < reps; ++r) {
                const auto start = clock::now();
                const TraceOutcome out = soft_trace(code, x, t);
                const auto stop = clock::now();
                if (!out.success() || *out.colluders != colluders)
                    throw std::runtime_error("bench_soft_trace: trace failed on a UDC code");
                best = std::min(best,
                                std::chrono::duration<double, std::micro>(stop - start).count());
            }
            times_us.push_back(best);
        }
        std::nth_element(times_us.begin(), times_us.begin() + times_us.size() / 2, times_us.end());
        report.points.push_back({M, times_us[times_us.size() / 2]});
    }

    for (std::size_t k = 1; k < report.points.size(); ++k) {
        const double f = report.points[k].median_us / report.points[k - 1].median_us;
        report.max_doubling_factor = std::max(report.max_doubling_factor, f);
    }
    return report;
}

}  // namespace acfp
