#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"
#include "uint128.hpp"

namespace permprod {

/// C(a, b), or nullopt if it does not fit in 128 bits.
inline std::optional<u128> binomial(u128 a, u128 b) noexcept {
    if (b > a) return u128{0};
    if (b > a - b) b = a - b;
    u128 r = 1;
    for (u128 i = 1; i <= b; ++i) {
        // r * (a - b + i) / i is exact at every step.
        auto m = checked_mul(r, a - b + i);
        if (!m) return std::nullopt;
        r = *m / i;
    }
    return r;
}

/// Multisets of size m drawn from q items: C(q + m - 1, m).
inline std::optional<u128> multiset_count(u128 q, std::size_t m) noexcept {
    if (m == 0) return u128{1};
    if (q == 0) return u128{0};
    return binomial(q + m - 1, m);
}

/// Number of (k-2)-multisets of permutations of 1..n visited by a full sweep.
inline std::uint64_t sweep_size(std::size_t n, std::size_t k) {
    if (k < 2) throw error(errc::invalid_config, "sweep needs k >= 2");
    const auto c = multiset_count(factorial(n), k - 2);
    if (!c || *c > UINT64_MAX)
        throw error(errc::instance_too_large, "search space for n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                                  " exceeds 2^64 nodes");
    return static_cast<std::uint64_t>(*c);
}

namespace detail {

// Multisets of size r drawn from items x..q-1.
inline u128 tail_count(std::uint64_t q, std::uint64_t x, std::size_t r) {
    return *multiset_count(q - x, r);
}

} // namespace detail

/// Lexicographic index of a non-decreasing sequence over 0..q-1.
inline std::uint64_t multiset_rank(std::span<const std::uint64_t> items, std::uint64_t q) {
    u128 index = 0;
    std::uint64_t lo = 0;
    const std::size_t m = items.size();
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t r = m - j;
        index += detail::tail_count(q, lo, r) - detail::tail_count(q, items[j], r);
        lo = items[j];
    }
    return static_cast<std::uint64_t>(index);
}

/// Inverse of multiset_rank for sequences of length m.
inline std::vector<std::uint64_t> multiset_unrank(std::uint64_t index, std::uint64_t q, std::size_t m) {
    std::vector<std::uint64_t> items(m);
    u128 idx = index;
    std::uint64_t lo = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t r = m - j;
        const u128 from_lo = detail::tail_count(q, lo, r);
        // Largest x in [lo, q) with from_lo - tail_count(x) <= idx.
        std::uint64_t a = lo, b = q - 1;
        while (a < b) {
            const std::uint64_t mid = a + (b - a + 1) / 2;
            if (from_lo - detail::tail_count(q, mid, r) <= idx) a = mid;
            else b = mid - 1;
        }
        idx -= from_lo - detail::tail_count(q, a, r);
        items[j] = a;
        lo = a;
    }
    return items;
}

/// Half-open range [begin, end) of sweep indices.
struct IndexRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;

    std::uint64_t size() const noexcept { return end - begin; }
    bool operator==(const IndexRange&) const = default;
};

/// Splits the sweep over (k-2)-multisets into `workers` contiguous ranges of
/// near-equal size.  Ranges may be empty when workers exceed the sweep size.
inline std::vector<IndexRange> partition_space(std::size_t n, std::size_t k, std::size_t workers) {
    if (workers == 0) throw error(errc::invalid_config, "workers must be positive");
    const u128 total = sweep_size(n, k);
    std::vector<IndexRange> ranges(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        ranges[w].begin = static_cast<std::uint64_t>(total * w / workers);
        ranges[w].end = static_cast<std::uint64_t>(total * (w + 1) / workers);
    }
    return ranges;
}

} // namespace permprod
