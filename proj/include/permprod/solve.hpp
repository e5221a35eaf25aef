#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "closed_forms.hpp"
#include "kset.hpp"
#include "results_io.hpp"
#include "search.hpp"

namespace permprod {

/// A value (and optionally minimizers) together with how it was obtained.
struct Solution {
    std::size_t n = 0;
    std::size_t k = 0;
    Value v_min = 0;
    std::optional<std::uint64_t> n_min;
    std::optional<KSet> lex_min_set;
    std::vector<KSet> minimizers;
    Method method = Method::ClosedForm;
    std::uint64_t enumerated = 0;
    std::chrono::nanoseconds elapsed{0};
};

namespace detail {

inline Solution from_search(const SearchResult& r) {
    return {r.n, r.k, r.v_min, r.n_min, r.lex_min_set, r.minimizers, Method::Search, r.enumerated, r.elapsed};
}

// The only minimizing class when n = 1 or k = 1.
inline KSet degenerate_minimizer(std::size_t n, std::size_t k) {
    return KSet(std::vector<Permutation>(k, Permutation::identity(n)));
}

} // namespace detail

/// v_min by closed form where one exists, else by search.  `base` supplies
/// worker count, cap and progress settings; its n, k and mode are overridden.
inline Solution solve_vmin(std::size_t n, std::size_t k, SearchConfig base = {}) {
    if (auto cf = vmin_closed(n, k)) {
        Solution s;
        s.n = n;
        s.k = k;
        s.v_min = cf->value;
        return s;
    }
    base.n = n;
    base.k = k;
    base.mode = SearchMode::ValueOnly;
    return detail::from_search(search(base));
}

/// v_min, N_min and the smallest canonical minimizer; with `list` set, every
/// canonical minimizer.
inline Solution solve_minimizers(std::size_t n, std::size_t k, bool list, SearchConfig base = {}) {
    if (n == 1 || k == 1) {
        Solution s;
        s.n = n;
        s.k = k;
        s.v_min = vmin_closed(n, k)->value;
        s.n_min = 1;
        s.lex_min_set = detail::degenerate_minimizer(n, k);
        if (list) s.minimizers = {*s.lex_min_set};
        return s;
    }
    base.n = n;
    base.k = k;
    base.mode = list ? SearchMode::ListMinimizers : SearchMode::CountMinimizers;
    return detail::from_search(search(base));
}

/// N_min: 1 when n <= 2 or k <= 2, else counted by search.
inline Solution solve_count(std::size_t n, std::size_t k, SearchConfig base = {}) {
    if (auto trivial = nmin_trivial(n, k)) {
        // Every trivial cell also has a closed-form v_min.
        Solution s = solve_vmin(n, k, base);
        s.n_min = *trivial;
        return s;
    }
    return solve_minimizers(n, k, false, base);
}

inline std::uint64_t to_ms(std::chrono::nanoseconds d) {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
}

inline ResultRecord make_record(const Solution& s, Quantity q) {
    ResultRecord r;
    r.n = s.n;
    r.k = s.k;
    r.quantity = q;
    r.value = q == Quantity::NMin ? std::to_string(s.n_min.value()) : to_string(s.v_min);
    r.lex_min_set = s.lex_min_set;
    r.method = s.method;
    r.enumerated = s.enumerated;
    r.elapsed_ms = to_ms(s.elapsed);
    r.created_at = utc_timestamp();
    return r;
}

} // namespace permprod
