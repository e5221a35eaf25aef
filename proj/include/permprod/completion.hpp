#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "error.hpp"
#include "kset.hpp"
#include "permutation.hpp"
#include "uint128.hpp"

namespace permprod {

struct Completion {
    Value value = 0;
    Permutation perm;
};

namespace detail {

// Positions ordered by decreasing product; equal products keep position order.
// The r-th position in this order receives value r+1 in the minimal pairing.
inline std::vector<std::size_t> completion_order(const ProductVector& pv) {
    std::vector<std::size_t> order(pv.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pv[a] > pv[b]; });
    return order;
}

} // namespace detail

/// Minimal dot product of pv with a permutation of 1..n, paired largest
/// product with smallest value.  Among optimal permutations the one with the
/// smallest base-(n+1) key is returned.
inline Completion optimal_completion(const ProductVector& pv) {
    const auto order = detail::completion_order(pv);
    std::vector<int> entries(pv.n());
    Value value = 0;
    for (std::size_t r = 0; r < order.size(); ++r) {
        entries[order[r]] = static_cast<int>(r + 1);
        value = add_or_throw(value, mul_or_throw(pv[order[r]], r + 1));
    }
    return {value, Permutation::from_entries(std::span<const int>(entries))};
}

/// Number of optimal completions: the product over runs of equal products of
/// (run length)!.  Saturates at u128_max.
inline u128 count_optimal_completions(const ProductVector& pv) {
    std::vector<u128> vals(pv.products().begin(), pv.products().end());
    std::sort(vals.begin(), vals.end());
    u128 count = 1;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= vals.size(); ++i) {
        if (i < vals.size() && vals[i] == vals[i - 1]) {
            ++run;
            auto next = checked_mul<u128>(count, run);
            count = next ? *next : u128_max;
        } else {
            run = 1;
        }
    }
    return count;
}

/// Visits every optimal completion of pv; the first one visited has the
/// smallest key.  Within each run of equal products the assigned block of
/// values may be permuted freely; no other permutation attains the minimum.  Throws CompletionExplosion
/// before visiting anything if more than cap completions exist.
template <class Visitor>
void for_each_optimal_completion(const ProductVector& pv, std::uint64_t cap, Visitor&& visit) {
    const u128 total = count_optimal_completions(pv);
    if (total > cap)
        throw error(errc::completion_explosion,
                    to_string(total) + " optimal completions exceed cap " + std::to_string(cap));

    const auto order = detail::completion_order(pv);
    const std::size_t n = pv.n();

    // Runs of equal products, each holding its positions (ascending) and the
    // values it owns (ascending, so the first arrangement is lex smallest).
    struct Run {
        std::vector<std::size_t> positions;
        std::vector<int> values;
    };
    std::vector<Run> runs;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == 0 || pv[order[r]] != pv[order[r - 1]]) runs.emplace_back();
        runs.back().positions.push_back(order[r]);
        runs.back().values.push_back(static_cast<int>(r + 1));
    }
    for (auto& run : runs) std::sort(run.positions.begin(), run.positions.end());

    std::vector<int> entries(n);
    for (;;) {
        for (const auto& run : runs)
            for (std::size_t t = 0; t < run.positions.size(); ++t) entries[run.positions[t]] = run.values[t];
        visit(Permutation::from_entries(std::span<const int>(entries)));

        // Odometer over the runs, last run fastest.
        std::size_t j = runs.size();
        while (j > 0) {
            --j;
            if (std::next_permutation(runs[j].values.begin(), runs[j].values.end())) break;
            if (j == 0) return;
        }
        if (runs.empty()) return;
    }
}

inline std::vector<Permutation> all_optimal_completions(const ProductVector& pv, std::uint64_t cap) {
    std::vector<Permutation> out;
    for_each_optimal_completion(pv, cap, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

} // namespace permprod
