#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace permprod {

/// Largest n supported by the fixed-capacity storage.
inline constexpr std::size_t max_degree = 15;

/// An ordering of 1..n, stored as 8-bit entries in a fixed-capacity array.
///
/// Entries are 1-based values; positions are 0-based.  Unused slots are zero,
/// so the defaulted ordering compares degree first and then entries
/// lexicographically, which for a common degree is exactly the order of the
/// base-(n+1) digit string.
class Permutation {
public:
    using value_type = std::uint8_t;

    constexpr Permutation() noexcept = default;

    static constexpr Permutation identity(std::size_t n) {
        check_degree(n);
        Permutation p;
        p.n_ = static_cast<value_type>(n);
        for (std::size_t i = 0; i < n; ++i) p.e_[i] = static_cast<value_type>(i + 1);
        return p;
    }

    /// Builds from 1-based entries; throws unless they form a bijection on 1..size.
    template <class Int>
    static Permutation from_entries(std::span<const Int> entries) {
        if (entries.empty()) throw error(errc::empty_input, "permutation needs at least one entry");
        check_degree(entries.size());
        const std::size_t n = entries.size();
        std::array<bool, max_degree + 1> seen{};
        Permutation p;
        p.n_ = static_cast<value_type>(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = entries[i];
            if (v < 1 || static_cast<std::size_t>(v) > n)
                throw error(errc::out_of_range, "entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(v)])
                throw error(errc::duplicate_entry, "entry " + std::to_string(v) + " repeated");
            seen[static_cast<std::size_t>(v)] = true;
            p.e_[i] = static_cast<value_type>(v);
        }
        return p;
    }

    constexpr std::size_t size() const noexcept { return n_; }

    /// Value at 0-based position i (a number in 1..n).
    constexpr value_type operator[](std::size_t i) const noexcept { return e_[i]; }

    std::span<const value_type> entries() const noexcept { return {e_.data(), n_}; }

    constexpr bool is_identity() const noexcept {
        for (std::size_t i = 0; i < n_; ++i)
            if (e_[i] != i + 1) return false;
        return true;
    }

    constexpr Permutation inverse() const noexcept {
        Permutation r;
        r.n_ = n_;
        for (std::size_t i = 0; i < n_; ++i) r.e_[e_[i] - 1] = static_cast<value_type>(i + 1);
        return r;
    }

    /// Position reordering: result(i) = (*this)(sigma(i)).
    constexpr Permutation compose(const Permutation& sigma) const noexcept {
        Permutation r;
        r.n_ = n_;
        for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[sigma.e_[i] - 1];
        return r;
    }

    /// Steps to the lexicographic successor; returns false (and wraps to the
    /// identity) when already at the last permutation.
    bool next() noexcept { return std::next_permutation(e_.begin(), e_.begin() + n_); }

    /// Index in lexicographic order, 0 for the identity.
    std::uint64_t rank() const noexcept {
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            std::uint64_t smaller = 0;
            for (std::size_t j = i + 1; j < n_; ++j)
                if (e_[j] < e_[i]) ++smaller;
            r = r * (n_ - i) + smaller;
        }
        return r;
    }

    static Permutation unrank(std::size_t n, std::uint64_t index);

    constexpr auto operator<=>(const Permutation&) const noexcept = default;
    constexpr bool operator==(const Permutation&) const noexcept = default;

private:
    static constexpr void check_degree(std::size_t n) {
        if (n == 0) throw error(errc::empty_input, "permutation degree must be at least 1");
        if (n > max_degree)
            throw error(errc::out_of_range, "degree " + std::to_string(n) + " exceeds " + std::to_string(max_degree));
    }

    value_type n_ = 0;
    std::array<value_type, max_degree> e_{};
};

inline constexpr std::uint64_t factorial(std::size_t n) noexcept {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Permutation Permutation::unrank(std::size_t n, std::uint64_t index) {
    check_degree(n);
    if (index >= factorial(n))
        throw error(errc::out_of_range, "permutation index " + std::to_string(index) + " >= " + std::to_string(n) + "!");
    std::array<value_type, max_degree> pool{};
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<value_type>(i + 1);
    Permutation p;
    p.n_ = static_cast<value_type>(n);
    std::size_t left = n;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t block = factorial(left - 1);
        const auto pick = static_cast<std::size_t>(index / block);
        index %= block;
        p.e_[i] = pool[pick];
        std::copy(pool.begin() + pick + 1, pool.begin() + left, pool.begin() + pick);
        --left;
    }
    return p;
}

template <class Int>
Permutation make_permutation(std::span<const Int> entries) {
    return Permutation::from_entries(entries);
}

inline Permutation make_permutation(std::initializer_list<int> entries) {
    return Permutation::from_entries(std::span<const int>(entries.begin(), entries.size()));
}

/// Digit for a value: 1..9 then a=10, b=11, ...
inline char digit_char(unsigned v) noexcept {
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + (v - 10));
}

inline std::string to_string(const Permutation& p) {
    std::string s;
    s.reserve(p.size());
    for (auto v : p.entries()) s.push_back(digit_char(v));
    return s;
}

/// Parses the compact digit/letter notation, e.g. "312" or "96485372a1".
inline Permutation parse_permutation(std::string_view text) {
    std::vector<int> entries;
    entries.reserve(text.size());
    for (char c : text) {
        if (c >= '1' && c <= '9') entries.push_back(c - '0');
        else if (c >= 'a' && c <= 'f') entries.push_back(10 + (c - 'a'));
        else throw error(errc::parse_error, "bad permutation digit '" + std::string(1, c) + "'");
    }
    return Permutation::from_entries(std::span<const int>(entries));
}

} // namespace permprod
