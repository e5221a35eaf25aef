#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "error.hpp"
#include "kset.hpp"
#include "uint128.hpp"

namespace permprod {

enum class ClosedFormSource {
    VMaxPowerSum,
    N1,
    K1,
    N2Even,
    N2Odd,
    K2Triangular,
    NminTrivial,
    NmaxAlways,
};

constexpr std::string_view source_name(ClosedFormSource s) noexcept {
    switch (s) {
        case ClosedFormSource::VMaxPowerSum: return "VMaxPowerSum";
        case ClosedFormSource::N1: return "N1";
        case ClosedFormSource::K1: return "K1";
        case ClosedFormSource::N2Even: return "N2Even";
        case ClosedFormSource::N2Odd: return "N2Odd";
        case ClosedFormSource::K2Triangular: return "K2Triangular";
        case ClosedFormSource::NminTrivial: return "NminTrivial";
        case ClosedFormSource::NmaxAlways: return "NmaxAlways";
    }
    return "Unknown";
}

struct ClosedFormAnswer {
    Value value = 0;
    ClosedFormSource source{};

    bool operator==(const ClosedFormAnswer&) const = default;
};

namespace detail {

inline void check_nk(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1) throw error(errc::invalid_config, "n and k must be at least 1");
}

} // namespace detail

/// Largest v: all k members equal, giving the power sum of i^k.
inline Value vmax(std::size_t n, std::size_t k) {
    detail::check_nk(n, k);
    check_instance_range(n, k);
    Value sum = 0;
    for (std::size_t i = 1; i <= n; ++i) sum += *checked_pow(i, static_cast<unsigned>(k));
    return sum;
}

/// Minimum of v where a formula is known (n = 1, k = 1, n = 2, k = 2).
inline std::optional<ClosedFormAnswer> vmin_closed(std::size_t n, std::size_t k) {
    detail::check_nk(n, k);
    if (n == 1) return ClosedFormAnswer{1, ClosedFormSource::N1};
    if (k == 1) return ClosedFormAnswer{static_cast<Value>(n) * (n + 1) / 2, ClosedFormSource::K1};
    if (n == 2) {
        // Half of the members one way round, half the other: 2^m + 2^m for
        // k = 2m, and 2^m + 2^(m+1) for k = 2m + 1.
        const auto pow2 = checked_pow(2, static_cast<unsigned>(k / 2));
        if (!pow2) throw error(errc::overflow, "2^(k/2) exceeds 128 bits");
        if (k % 2 == 0) return ClosedFormAnswer{mul_or_throw(2, *pow2), ClosedFormSource::N2Even};
        return ClosedFormAnswer{mul_or_throw(3, *pow2), ClosedFormSource::N2Odd};
    }
    if (k == 2) {
        const Value m = n;
        return ClosedFormAnswer{m * (m + 1) * (m + 2) / 6, ClosedFormSource::K2Triangular};
    }
    return std::nullopt;
}

/// N_min is 1 whenever n <= 2 or k <= 2.
inline std::optional<std::uint64_t> nmin_trivial(std::size_t n, std::size_t k) {
    detail::check_nk(n, k);
    if (n <= 2 || k <= 2) return 1;
    return std::nullopt;
}

/// The maximum is attained by exactly one class, the all-identical set.
inline std::uint64_t nmax(std::size_t n, std::size_t k) {
    detail::check_nk(n, k);
    return 1;
}

} // namespace permprod
