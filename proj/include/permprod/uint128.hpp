#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "error.hpp"

namespace permprod {

using u128 = unsigned __int128;

/// Values of v, products and sums all live in 128-bit unsigned arithmetic.
using Value = u128;

inline constexpr u128 u128_max = ~u128{0};

template <class T>
constexpr std::optional<T> checked_mul(T a, T b) noexcept {
    T r{};
    if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
    return r;
}

template <class T>
constexpr std::optional<T> checked_add(T a, T b) noexcept {
    T r{};
    if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
    return r;
}

inline u128 mul_or_throw(u128 a, u128 b) {
    auto r = checked_mul(a, b);
    if (!r) throw error(errc::overflow, "128-bit multiplication overflow");
    return *r;
}

inline u128 add_or_throw(u128 a, u128 b) {
    auto r = checked_add(a, b);
    if (!r) throw error(errc::overflow, "128-bit addition overflow");
    return *r;
}

/// base^exp, or nullopt when the result does not fit in 128 bits.
constexpr std::optional<u128> checked_pow(u128 base, unsigned exp) noexcept {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        auto next = checked_mul(r, base);
        if (!next) return std::nullopt;
        r = *next;
    }
    return r;
}

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline u128 parse_u128(std::string_view s) {
    if (s.empty()) throw error(errc::parse_error, "empty integer");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw error(errc::parse_error, "not a decimal integer: " + std::string(s));
        auto m = checked_mul<u128>(v, 10);
        if (!m) throw error(errc::overflow, "integer exceeds 128 bits: " + std::string(s));
        auto a = checked_add<u128>(*m, static_cast<u128>(c - '0'));
        if (!a) throw error(errc::overflow, "integer exceeds 128 bits: " + std::string(s));
        v = *a;
    }
    return v;
}

} // namespace permprod
