#include "dfl/sweep.hpp"

#include <stdexcept>
#include <thread>

namespace dfl {

std::vector<Rat> sweep_grid(const Int& max_num, const Int& max_den) {
    if (max_num < 1 || max_den < 1) {
        throw std::invalid_argument("sweep_grid: bounds must be >= 1");
    }
    std::vector<Rat> values;
    for (Int p = -max_num; p <= max_num; ++p) {
        if (p.is_zero()) {
            values.emplace_back(0);
            continue;
        }
        for (Int q = 1; q <= max_den; ++q) {
            if (boost::multiprecision::gcd(p, q) == 1) {
                values.emplace_back(p, q);
            }
        }
    }
    return values;
}

namespace {

bool in_commuting_families(const Rat& s, const Rat& t) {
    return s == t || s.is_zero() || t.is_zero() || (s.num() == 1 && t.num() == 1);
}

PairOutcome evaluate_pair(const Rat& s, const Rat& t) {
    PairOutcome out{s, t, classify(s, t), true, {}, {}};
    OracleResult oracle = brute_force_commute(s, t, Rat(kSweepLo), Rat(kSweepHi),
                                              kSweepDenFactor * s.den() * t.den());
    out.oracle_clear = oracle.no_counterexample;
    out.oracle_witness = std::move(oracle.witness);
    if (!out.verdict.commutes) {
        out.verified_witness = find_witness(s, t);
    }
    return out;
}

}  // namespace

SweepReport run_sweep(const Int& max_num, const Int& max_den, unsigned threads) {
    SweepReport report;
    report.values = sweep_grid(max_num, max_den);
    const std::size_t n = report.values.size();
    report.pairs.resize(n * n);

    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
    }
    if (threads == 0) {
        threads = 1;
    }
    if (threads > n * n) {
        threads = static_cast<unsigned>(n * n);
    }

    // Workers fill disjoint index ranges of the preallocated pair table, so
    // the final report is in grid order no matter how the work is scheduled.
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            report.pairs[i] = evaluate_pair(report.values[i / n], report.values[i % n]);
        }
    };
    if (threads <= 1) {
        worker(0, n * n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n * n + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n * n, begin + chunk);
            if (begin < end) {
                pool.emplace_back(worker, begin, end);
            }
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    for (const PairOutcome& p : report.pairs) {
        if (p.verdict.commutes) {
            ++report.commuting_count;
        }
        if (!p.agrees()) {
            ++report.mismatch_count;
        }
        if (p.verdict.commutes != in_commuting_families(p.s, p.t)) {
            report.families_exact = false;
        }
    }
    return report;
}

}  // namespace dfl
