#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "completion.hpp"
#include "error.hpp"
#include "kset.hpp"
#include "multiset.hpp"
#include "permutation.hpp"
#include "uint128.hpp"

namespace permprod {

enum class SearchMode { ValueOnly, CountMinimizers, ListMinimizers };

struct SearchProgress {
    int pass = 1;                     // 1 = value sweep, 2 = minimizer sweep
    std::uint64_t done = 0;           // nodes finished in this pass, all workers
    std::uint64_t total = 0;          // nodes in one full sweep
};

struct SearchConfig {
    std::size_t n = 0;
    std::size_t k = 0;
    SearchMode mode = SearchMode::ValueOnly;
    std::size_t workers = 1;
    std::uint64_t completion_cap = 1'000'000;
    /// Nodes between progress callbacks per worker; 0 disables reporting.
    std::uint64_t checkpoint_interval = 0;
    /// Called from worker threads; must be thread-safe.
    std::function<void(const SearchProgress&)> on_progress;
    /// Nodes at the running minimum each worker remembers during the value
    /// sweep; a worker that needs more re-sweeps its range.
    std::size_t tie_buffer = std::size_t{1} << 16;
};

struct SearchResult {
    std::size_t n = 0;
    std::size_t k = 0;
    Value v_min = 0;
    std::optional<std::uint64_t> n_min;
    std::optional<KSet> lex_min_set;
    /// Every canonical minimizer in ascending key order (ListMinimizers only).
    std::vector<KSet> minimizers;
    /// Number of (k-2)-multisets visited by one sweep.
    std::uint64_t enumerated = 0;
    std::chrono::nanoseconds elapsed{0};

    /// Equality on everything except elapsed time.
    bool same_answer(const SearchResult& o) const {
        return n == o.n && k == o.k && v_min == o.v_min && n_min == o.n_min && lex_min_set == o.lex_min_set &&
               minimizers == o.minimizers && enumerated == o.enumerated;
    }
};

namespace detail {

// Ascending sort of a short fixed-size array.  Up to eight entries a
// branchless odd-even transposition network wins; beyond that its N^2
// compare-exchanges cost more than insertion sort's mispredictions.
template <std::size_t N, class T>
inline void sort_small(std::array<T, N>& a) noexcept {
    if constexpr (N <= 8) {
        for (std::size_t pass = 0; pass < N; ++pass) {
            for (std::size_t i = pass & 1; i + 1 < N; i += 2) {
                const T x = a[i];
                const T y = a[i + 1];
                a[i] = std::min(x, y);
                a[i + 1] = std::max(x, y);
            }
        }
    } else {
        for (std::size_t i = 1; i < N; ++i) {
            const T x = a[i];
            std::size_t j = i;
            while (j > 0 && a[j - 1] > x) {
                a[j] = a[j - 1];
                --j;
            }
            a[j] = x;
        }
    }
}

// Minimal dot product with a permutation of 1..N: weights N..1 against the
// ascending products.
template <std::size_t N, class T>
inline T min_pairing(std::array<T, N> pv) noexcept {
    sort_small(pv);
    T v = 0;
    for (std::size_t i = 0; i < N; ++i) v += pv[i] * static_cast<T>(N - i);
    return v;
}

// Walks the lexicographic sweep of (k-2)-multisets of permutations of 1..N
// over one index range.  Prefix products are kept per level so that moving
// one level recomputes only the levels below it.
template <std::size_t N, class T>
class Sweep {
public:
    Sweep(std::size_t levels, IndexRange range) : levels_(levels), range_(range) {
        for (std::size_t i = 0; i < N; ++i) identity_[i] = static_cast<T>(i + 1);
        if (levels_ == 0 || range_.size() == 0) return;
        const auto idx = multiset_unrank(range_.begin, factorial(N), levels_);
        members_.reserve(levels_);
        for (auto r : idx) members_.push_back(Permutation::unrank(N, r));
        prefix_.resize(levels_);
        refresh_prefix(0);
    }

    /// Members of the current multiset, ascending.
    std::span<const Permutation> members() const noexcept { return members_; }

    /// Calls leaf(pv) for every node in the range; pv includes the identity
    /// and every member.  tick(count) is called every `interval` nodes.
    template <class Leaf, class Tick>
    void run(Leaf&& leaf, std::uint64_t interval, Tick&& tick) {
        std::uint64_t remaining = range_.size();
        if (remaining == 0) return;
        std::uint64_t countdown = interval ? interval : std::numeric_limits<std::uint64_t>::max();
        auto step = [&]() -> bool {
            if (--countdown == 0) {
                tick(interval);
                countdown = interval;
            }
            return --remaining != 0;
        };
        if (levels_ == 0) {
            leaf(identity_);
            step();
            return;
        }
        std::array<T, N> pv;
        for (;;) {
            const auto& base = levels_ >= 2 ? prefix_[levels_ - 2] : identity_;
            Permutation& last = members_[levels_ - 1];
            do {
                for (std::size_t i = 0; i < N; ++i) pv[i] = base[i] * static_cast<T>(last[i]);
                leaf(pv);
                if (!step()) return;
            } while (last.next());
            advance_upper();
        }
    }

private:
    void refresh_prefix(std::size_t from) {
        for (std::size_t j = from; j < levels_; ++j) {
            const auto& prev = j == 0 ? identity_ : prefix_[j - 1];
            for (std::size_t i = 0; i < N; ++i) prefix_[j][i] = prev[i] * static_cast<T>(members_[j][i]);
        }
    }

    // The last level just wrapped; move the deepest upper level that can
    // still advance and reset everything below it to the same permutation.
    void advance_upper() {
        std::size_t j = levels_ - 1;
        for (;;) {
            // Ranges never run past the final multiset, so j stays >= 0.
            --j;
            if (members_[j].next()) break;
        }
        for (std::size_t t = j + 1; t < levels_; ++t) members_[t] = members_[j];
        refresh_prefix(j);
    }

    std::size_t levels_;
    IndexRange range_;
    std::array<T, N> identity_{};
    std::vector<Permutation> members_;
    std::vector<std::array<T, N>> prefix_;
};

template <class Fn>
void run_workers(std::size_t workers, Fn&& fn) {
    if (workers == 1) {
        fn(std::size_t{0});
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                fn(w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

template <std::size_t N, class T>
SearchResult run_search(const SearchConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t levels = cfg.k - 2;
    const std::uint64_t total = sweep_size(N, cfg.k);
    const auto ranges = partition_space(N, cfg.k, cfg.workers);
    const bool counting = cfg.mode != SearchMode::ValueOnly;

    std::atomic<std::uint64_t> done{0};
    auto make_tick = [&](int pass) {
        return [&, pass](std::uint64_t count) {
            const auto d = done.fetch_add(count) + count;
            if (cfg.on_progress) cfg.on_progress(SearchProgress{pass, d, total});
        };
    };

    struct Local {
        T best = std::numeric_limits<T>::max();
        std::vector<std::uint64_t> hits;  // node indices at `best`
        bool overflowed = false;
    };
    std::vector<Local> local(cfg.workers);

    // Pass 1: the minimum completed value, plus (when counting) the nodes
    // attaining each worker's running minimum.
    run_workers(cfg.workers, [&](std::size_t w) {
        Sweep<N, T> sweep(levels, ranges[w]);
        Local& mine = local[w];
        if (!counting) {
            T best = std::numeric_limits<T>::max();
            sweep.run([&](const std::array<T, N>& pv) { best = std::min(best, min_pairing(pv)); },
                      cfg.checkpoint_interval, make_tick(1));
            mine.best = best;
            return;
        }
        std::uint64_t node = ranges[w].begin;
        sweep.run(
            [&](const std::array<T, N>& pv) {
                const T v = min_pairing(pv);
                if (v < mine.best) {
                    mine.best = v;
                    mine.hits.clear();
                    mine.overflowed = false;
                }
                if (v == mine.best) {
                    if (mine.hits.size() < cfg.tie_buffer) mine.hits.push_back(node);
                    else mine.overflowed = true;
                }
                ++node;
            },
            cfg.checkpoint_interval, make_tick(1));
    });
    T v_min = std::numeric_limits<T>::max();
    for (const auto& l : local) v_min = std::min(v_min, l.best);

    SearchResult result;
    result.n = N;
    result.k = cfg.k;
    result.v_min = static_cast<Value>(v_min);
    result.enumerated = total;

    if (counting) {
        // Every node attaining the minimum, expanded over all of its optimal
        // completions and reduced to canonical form.
        const auto identity = Permutation::identity(N);
        auto expand = [&](std::span<const Permutation> middle, std::set<KSet>& found) {
            std::vector<Permutation> members;
            members.reserve(cfg.k);
            members.push_back(identity);
            members.insert(members.end(), middle.begin(), middle.end());
            const auto products = product_vector(members, N);
            for_each_optimal_completion(products, cfg.completion_cap, [&](const Permutation& c) {
                members.resize(cfg.k - 1);
                members.push_back(c);
                found.insert(canonicalize(KSet(members)));
            });
        };

        done = 0;
        std::vector<std::set<KSet>> local_sets(cfg.workers);
        run_workers(cfg.workers, [&](std::size_t w) {
            const Local& mine = local[w];
            if (mine.best != v_min) return;
            auto& found = local_sets[w];
            if (!mine.overflowed) {
                std::vector<Permutation> middle(levels);
                for (auto node : mine.hits) {
                    const auto idx = multiset_unrank(node, factorial(N), levels);
                    for (std::size_t j = 0; j < levels; ++j) middle[j] = Permutation::unrank(N, idx[j]);
                    expand(middle, found);
                }
                return;
            }
            // Pass 2 for this range only: re-sweep collecting exact matches.
            Sweep<N, T> sweep(levels, ranges[w]);
            sweep.run(
                [&](const std::array<T, N>& pv) {
                    if (min_pairing(pv) == v_min) expand(sweep.members(), found);
                },
                cfg.checkpoint_interval, make_tick(2));
        });
        std::set<KSet> all;
        for (auto& s : local_sets) all.merge(s);
        result.n_min = all.size();
        if (!all.empty()) result.lex_min_set = *all.begin();
        if (cfg.mode == SearchMode::ListMinimizers) result.minimizers.assign(all.begin(), all.end());
    }

    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

template <class T, std::size_t... Ns>
SearchResult dispatch_degree(const SearchConfig& cfg, std::index_sequence<Ns...>) {
    SearchResult out;
    const bool hit = ((cfg.n == Ns + 1 ? (out = run_search<Ns + 1, T>(cfg), true) : false) || ...);
    if (!hit) throw error(errc::invalid_config, "unsupported n");
    return out;
}

} // namespace detail

inline void validate(const SearchConfig& cfg) {
    if (cfg.n < 1 || cfg.n > max_degree)
        throw error(errc::invalid_config, "n must be in 1.." + std::to_string(max_degree));
    if (cfg.k < 2) throw error(errc::invalid_config, "search needs k >= 2; k = 1 has a closed form");
    if (cfg.workers < 1) throw error(errc::invalid_config, "workers must be positive");
    if (cfg.completion_cap < 1) throw error(errc::invalid_config, "completion cap must be positive");
    check_instance_range(cfg.n, cfg.k);
    sweep_size(cfg.n, cfg.k);
}

/// Exhaustive minimum of v over k-sets of permutations of 1..n.
///
/// The first member is fixed to the identity, the middle k-2 members range
/// over all multisets of permutations in lexicographic order, and the last
/// member is the rearrangement-optimal completion of the partial products.
/// Counting modes expand every node at the minimum into its canonical
/// k-sets; those nodes are remembered during the value sweep, and a range
/// whose tie list outgrows the buffer is swept a second time.
inline SearchResult search(const SearchConfig& cfg) {
    validate(cfg);
    const u128 bound = checked_pow(cfg.n, static_cast<unsigned>(cfg.k + 1)).value();
    constexpr auto degrees = std::make_index_sequence<max_degree>{};
    if (bound <= UINT32_MAX) return detail::dispatch_degree<std::uint32_t>(cfg, degrees);
    if (bound <= UINT64_MAX) return detail::dispatch_degree<std::uint64_t>(cfg, degrees);
    return detail::dispatch_degree<u128>(cfg, degrees);
}

} // namespace permprod
