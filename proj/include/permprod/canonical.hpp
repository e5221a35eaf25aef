#pragma once

#include <algorithm>
#include <vector>

#include "kset.hpp"
#include "permutation.hpp"

namespace permprod {

namespace detail {

inline void reorder_into(const KSet& s, const Permutation& sigma, std::vector<Permutation>& out) {
    out.clear();
    for (const auto& p : s.perms()) out.push_back(p.compose(sigma));
    std::sort(out.begin(), out.end());
}

} // namespace detail

/// Smallest-key member of the orbit of s under simultaneous position
/// reordering p -> p o sigma.  The minimum always starts with the identity,
/// so only sigma = member^-1 for each distinct member needs to be tried.
inline KSet canonicalize(const KSet& s) {
    std::vector<Permutation> best;
    std::vector<Permutation> trial;
    best.reserve(s.k());
    trial.reserve(s.k());
    const auto perms = s.perms();
    for (std::size_t j = 0; j < perms.size(); ++j) {
        if (j > 0 && perms[j] == perms[j - 1]) continue;
        detail::reorder_into(s, perms[j].inverse(), trial);
        if (best.empty() || trial < best) best.swap(trial);
    }
    return KSet(std::move(best));
}

/// Same result as canonicalize, by trying all n! position reorderings.
inline KSet canonicalize_exhaustive(const KSet& s) {
    std::vector<Permutation> best;
    std::vector<Permutation> trial;
    auto sigma = Permutation::identity(s.n());
    do {
        detail::reorder_into(s, sigma, trial);
        if (best.empty() || trial < best) best.swap(trial);
    } while (sigma.next());
    return KSet(std::move(best));
}

} // namespace permprod
