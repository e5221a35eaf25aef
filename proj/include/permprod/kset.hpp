#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "permutation.hpp"
#include "uint128.hpp"

namespace permprod {

using BigInt = boost::multiprecision::cpp_int;

/// Throws Overflow unless n^(k+1) < 2^127, the bound under which every
/// partial product and every value of v is representable.
inline void check_instance_range(std::size_t n, std::size_t k) {
    const auto bound = checked_pow(static_cast<u128>(n), static_cast<unsigned>(k + 1));
    if (!bound || *bound >= (u128{1} << 127))
        throw error(errc::overflow, "n^(k+1) exceeds 2^127 for n=" + std::to_string(n) + " k=" + std::to_string(k));
}

/// A multiset of k permutations over a common n, kept sorted ascending.
class KSet {
public:
    KSet() = default;

    explicit KSet(std::vector<Permutation> perms) : perms_(std::move(perms)) {
        if (perms_.empty()) throw error(errc::empty_input, "a k-set needs at least one permutation");
        const auto n = perms_.front().size();
        for (const auto& p : perms_)
            if (p.size() != n) throw error(errc::invalid_config, "k-set members have different degrees");
        std::sort(perms_.begin(), perms_.end());
    }

    std::size_t n() const noexcept { return perms_.empty() ? 0 : perms_.front().size(); }
    std::size_t k() const noexcept { return perms_.size(); }
    std::span<const Permutation> perms() const noexcept { return perms_; }
    const Permutation& operator[](std::size_t j) const noexcept { return perms_[j]; }

    auto operator<=>(const KSet&) const = default;
    bool operator==(const KSet&) const = default;

private:
    std::vector<Permutation> perms_;
};

/// Position-wise products of a collection of permutations.
class ProductVector {
public:
    ProductVector() = default;

    explicit ProductVector(std::vector<u128> products) : products_(std::move(products)) {
        if (products_.empty()) throw error(errc::empty_input, "product vector needs at least one entry");
        if (products_.size() > max_degree) throw error(errc::out_of_range, "product vector longer than max degree");
        for (auto v : products_)
            if (v == 0) throw error(errc::out_of_range, "product vector entries must be positive");
    }

    std::size_t n() const noexcept { return products_.size(); }
    std::span<const u128> products() const noexcept { return products_; }
    u128 operator[](std::size_t i) const noexcept { return products_[i]; }

    bool operator==(const ProductVector&) const = default;

private:
    std::vector<u128> products_;
};

inline ProductVector product_vector(std::span<const Permutation> perms, std::size_t n) {
    std::vector<u128> out(n, 1);
    for (const auto& p : perms) {
        if (p.size() != n) throw error(errc::invalid_config, "permutation degree differs from n");
        for (std::size_t i = 0; i < n; ++i) out[i] = mul_or_throw(out[i], p[i]);
    }
    return ProductVector(std::move(out));
}

/// v = sum over positions of the product of the members' entries.
inline Value evaluate_v(const KSet& s) {
    check_instance_range(s.n(), s.k());
    const auto pv = product_vector(s.perms(), s.n());
    Value v = 0;
    for (auto x : pv.products()) v += x;
    return v;
}

/// The concatenated members read as one base-(n+1) number.
inline BigInt base_key(const KSet& s) {
    BigInt key = 0;
    const unsigned base = static_cast<unsigned>(s.n() + 1);
    for (const auto& p : s.perms())
        for (auto d : p.entries()) key = key * base + d;
    return key;
}

inline std::string to_string(const KSet& s) {
    std::string out = "(";
    for (std::size_t j = 0; j < s.k(); ++j) {
        if (j) out += ", ";
        out += to_string(s[j]);
    }
    out += ')';
    return out;
}

/// Parses "(123, 231, 312)" or "123,231,312"; parentheses and spaces optional.
inline KSet parse_kset(std::string_view text) {
    std::vector<Permutation> perms;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) perms.push_back(parse_permutation(token));
        token.clear();
    };
    for (char c : text) {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') flush();
        else token.push_back(c);
    }
    flush();
    return KSet(std::move(perms));
}

} // namespace permprod
