#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "canonical.hpp"
#include "error.hpp"
#include "kset.hpp"
#include "permutation.hpp"
#include "search.hpp"
#include "uint128.hpp"

namespace permprod {

inline constexpr std::uint64_t oracle_node_limit = 100'000'000;

/// Direct enumeration of every ordered tuple (identity, r2, ..., rk) with v
/// computed from scratch and minimizers reduced by the n!-reordering
/// canonical form.  Shares no code path with search() beyond the types.
inline SearchResult brute_force_oracle(std::size_t n, std::size_t k) {
    if (n < 1 || n > max_degree || k < 1) throw error(errc::invalid_config, "oracle needs 1 <= n <= 15 and k >= 1");
    const auto nodes = checked_pow(factorial(n), static_cast<unsigned>(k - 1));
    if (!nodes || *nodes > oracle_node_limit)
        throw error(errc::instance_too_large, "(n!)^(k-1) exceeds " + std::to_string(oracle_node_limit));
    check_instance_range(n, k);

    const auto start = std::chrono::steady_clock::now();
    std::vector<Permutation> tuple(k, Permutation::identity(n));
    Value best = u128_max;
    std::set<KSet> minimizers;
    std::uint64_t visited = 0;

    for (;;) {
        Value v = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Value prod = 1;
            for (const auto& r : tuple) prod *= r[i];
            v += prod;
        }
        ++visited;
        if (v < best) {
            best = v;
            minimizers.clear();
        }
        if (v == best) minimizers.insert(canonicalize_exhaustive(KSet(tuple)));

        // Odometer over positions 1..k-1; position 0 stays the identity.
        bool advanced = false;
        for (std::size_t j = k; j-- > 1;) {
            if (tuple[j].next()) {
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }

    SearchResult r;
    r.n = n;
    r.k = k;
    r.v_min = best;
    r.n_min = minimizers.size();
    r.lex_min_set = *minimizers.begin();
    r.minimizers.assign(minimizers.begin(), minimizers.end());
    r.enumerated = visited;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

} // namespace permprod
