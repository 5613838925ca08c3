#pragma once

#include <cmath>
#include <cstddef>
#include <span>

#include "citest/error.hpp"
#include "citest/profile.hpp"

namespace citest {

// Largest m with cit_m >= m, 0 if none. Expects non-increasing input.
inline std::size_t h_index(std::span<const Count> cit) noexcept {
    std::size_t lo = 0, hi = cit.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (cit[mid - 1] >= static_cast<Count>(mid)) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

inline std::size_t h_index(const CitationProfile& p) noexcept { return h_index(p.citations()); }

inline Count core_sum(std::span<const Count> cit, std::size_t s) {
    if (s < 1 || s > cit.size())
        throw RankOutOfRange("rank " + std::to_string(s) + " outside 1.." + std::to_string(cit.size()));
    Count sum = 0;
    for (std::size_t j = 0; j < s; ++j) sum += cit[j];
    return sum;
}

inline Count core_sum(const CitationProfile& p, std::size_t s) { return core_sum(p.citations(), s); }

// Search stops at k = p; the list is not padded with zeros.
inline std::size_t g_index(std::span<const Count> cit) noexcept {
    std::size_t g = 0;
    Count running = 0;
    for (std::size_t k = 1; k <= cit.size(); ++k) {
        running += cit[k - 1];
        if (running >= static_cast<Count>(k * k)) g = k;
    }
    return g;
}

inline std::size_t g_index(const CitationProfile& p) noexcept { return g_index(p.citations()); }

struct CoreIndices {
    std::size_t h = 0;
    std::size_t g = 0;
    Count n_cit_h = 0;
    double a_index = 0;      // N_cit(h) / h
    double r_index = 0;      // sqrt(N_cit(h))
    double e_index = 0;      // sqrt(N_cit(h) - h^2)
    double h_cap_index = 0;  // h * sqrt(r_floor)
    double d_index = 0;      // sqrt(2 N_cit(h) - h^2)
    Count r_floor = 0;       // floor(2 N_cit(h) / (h (h + 1))) - 1
    double q = 0;            // 2 N_cit(h) / h^2 - 1
    double q_prime = 0;      // N_cit(h) / h^2
};

inline CoreIndices compute_core_indices(std::span<const Count> cit) {
    CoreIndices ix;
    ix.h = h_index(cit);
    ix.g = g_index(cit);
    if (ix.h == 0) throw EmptyCore();
    const auto h = static_cast<Count>(ix.h);
    const auto hd = static_cast<double>(h);
    ix.n_cit_h = core_sum(cit, ix.h);
    const auto n = static_cast<double>(ix.n_cit_h);
    ix.a_index = n / hd;
    ix.r_index = std::sqrt(n);
    ix.e_index = std::sqrt(static_cast<double>(ix.n_cit_h - h * h));
    ix.r_floor = (2 * ix.n_cit_h) / (h * (h + 1)) - 1;
    ix.h_cap_index = hd * std::sqrt(static_cast<double>(ix.r_floor));
    ix.d_index = std::sqrt(static_cast<double>(2 * ix.n_cit_h - h * h));
    ix.q = 2.0 * n / (hd * hd) - 1.0;
    ix.q_prime = n / (hd * hd);
    return ix;
}

inline CoreIndices compute_core_indices(const CitationProfile& p) { return compute_core_indices(p.citations()); }

}  // namespace citest
