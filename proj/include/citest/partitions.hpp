#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "citest/error.hpp"

namespace citest {

inline constexpr long kDefaultPartitionCeiling = 5000;
inline constexpr long kDefaultEnumerationCeiling = 45;

// p(0..n) via Euler's pentagonal-number recurrence.
inline std::vector<mpz_class> partition_counts_upto(long n) {
    if (n < 0) throw NegativeArgument("partition count of a negative integer");
    std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (long m = 1; m <= n; ++m) {
        mpz_class acc = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const long g2 = k * (3 * k + 1) / 2;
            const bool plus = k % 2 == 1;
            if (plus) acc += p[static_cast<std::size_t>(m - g1)];
            else acc -= p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) {
                if (plus) acc += p[static_cast<std::size_t>(m - g2)];
                else acc -= p[static_cast<std::size_t>(m - g2)];
            }
        }
        p[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return p;
}

inline mpz_class partition_count(long n) { return partition_counts_upto(n).back(); }

// Side of the largest square in the Ferrers diagram.
inline std::size_t durfee_size(std::span<const int> parts) noexcept {
    std::size_t d = 0;
    while (d < parts.size() && parts[d] >= static_cast<int>(d + 1)) ++d;
    return d;
}

struct DurfeeDistribution {
    long n = 0;
    std::vector<mpz_class> counts;  // index d = Durfee side
    mpz_class total;
    std::size_t mode = 0;
    bool mode_tied = false;
    mpq_class mean;
    mpq_class variance;

    const mpz_class& count(std::size_t d) const {
        static const mpz_class zero = 0;
        return d < counts.size() ? counts[d] : zero;
    }
    double probability(std::size_t d) const {
        mpq_class r(count(d), total);
        return r.get_d();
    }
};

namespace detail {

inline void fill_statistics(DurfeeDistribution& dist) {
    dist.total = 0;
    mpz_class first = 0, second = 0;
    for (std::size_t d = 0; d < dist.counts.size(); ++d) {
        dist.total += dist.counts[d];
        first += dist.counts[d] * static_cast<unsigned long>(d);
        second += dist.counts[d] * static_cast<unsigned long>(d * d);
    }
    std::size_t best = 0;
    bool tied = false;
    for (std::size_t d = 1; d < dist.counts.size(); ++d) {
        if (dist.counts[d] > dist.counts[best]) {
            best = d;
            tied = false;
        } else if (dist.counts[d] == dist.counts[best]) {
            tied = true;
        }
    }
    dist.mode = best;
    dist.mode_tied = tied;
    dist.mean = mpq_class(first, dist.total);
    dist.mean.canonicalize();
    mpq_class m2(second, dist.total);
    m2.canonicalize();
    dist.variance = m2 - dist.mean * dist.mean;
}

}  // namespace detail

// Coefficient of x^n in x^{d^2} / prod_{j<=d} (1 - x^j)^2 for every d.
inline DurfeeDistribution count_by_durfee(long n, long ceiling = kDefaultPartitionCeiling) {
    if (n < 0) throw NegativeArgument("Durfee distribution of a negative integer");
    if (n > ceiling) throw ResourceLimit(n, ceiling);
    DurfeeDistribution dist;
    dist.n = n;
    const auto len = static_cast<std::size_t>(n) + 1;
    std::vector<mpz_class> series(len);
    series[0] = 1;
    dist.counts.push_back(n == 0 ? 1 : 0);
    for (long d = 1; d * d <= n; ++d) {
        const long room = n - d * d;
        for (int pass = 0; pass < 2; ++pass)
            for (long i = d; i <= room; ++i) series[static_cast<std::size_t>(i)] += series[static_cast<std::size_t>(i - d)];
        dist.counts.push_back(series[static_cast<std::size_t>(room)]);
    }
    detail::fill_statistics(dist);
    return dist;
}

// Calls visit(std::span<const int>) for every partition of n, parts non-increasing,
// in reverse lexicographic order (n first, 1+1+...+1 last).
template <class Visit>
void for_each_partition(int n, Visit&& visit, int ceiling = kDefaultEnumerationCeiling) {
    if (n < 0) throw NegativeArgument("partitions of a negative integer");
    if (n > ceiling) throw ResourceLimit(n, ceiling);
    if (n == 0) {
        visit(std::span<const int>{});
        return;
    }
    std::vector<int> parts{n};
    for (;;) {
        visit(std::span<const int>(parts));
        int ones = 0;
        while (!parts.empty() && parts.back() == 1) {
            parts.pop_back();
            ++ones;
        }
        if (parts.empty()) return;
        int part = parts.back() - 1;
        parts.back() = part;
        int rest = ones + 1;
        while (rest > part) {
            parts.push_back(part);
            rest -= part;
        }
        if (rest > 0) parts.push_back(rest);
    }
}

inline std::vector<std::vector<int>> enumerate_partitions(int n, int ceiling = kDefaultEnumerationCeiling) {
    std::vector<std::vector<int>> out;
    for_each_partition(n, [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); }, ceiling);
    return out;
}

inline double durfee_mode_formula(double n) noexcept { return 0.5404446394667307 * std::sqrt(n); }

struct MomentEstimates {
    double mean = 0;
    double variance = 0;
};

inline MomentEstimates durfee_moment_estimates(double n) {
    if (n < 1) throw NegativeArgument("moment estimates need n >= 1");
    const double s = std::sqrt(n);
    return {0.540446395 * s + 0.085691 + 0.0374788 / s, 0.081057 * s + 0.018459 - 0.018015 / s};
}

inline double hardy_ramanujan(double n) {
    if (n < 1) throw NegativeArgument("Hardy-Ramanujan approximation needs n >= 1");
    return std::exp(std::numbers::pi * std::sqrt(2 * n / 3)) / (4 * n * std::numbers::sqrt3);
}

}  // namespace citest
