#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "error.hpp"
#include "kset.hpp"
#include "uint128.hpp"

namespace permprod {

inline constexpr std::string_view artifact_version = "1.0.0";

enum class Quantity { VMin, VMax, NMin, NMax };
enum class Method { ClosedForm, Search, Oracle };

NLOHMANN_JSON_SERIALIZE_ENUM(Quantity, {{Quantity::VMin, "VMin"},
                                        {Quantity::VMax, "VMax"},
                                        {Quantity::NMin, "NMin"},
                                        {Quantity::NMax, "NMax"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Method, {{Method::ClosedForm, "ClosedForm"},
                                      {Method::Search, "Search"},
                                      {Method::Oracle, "Oracle"}})

/// One computed cell.  (n, k, quantity) is the logical key.
struct ResultRecord {
    std::size_t n = 0;
    std::size_t k = 0;
    Quantity quantity = Quantity::VMin;
    std::string value;  // decimal, so 128-bit values survive any JSON reader
    std::optional<KSet> lex_min_set;
    Method method = Method::Search;
    std::uint64_t enumerated = 0;
    std::uint64_t elapsed_ms = 0;
    std::string created_at;
    std::string artifact_version{permprod::artifact_version};

    bool operator==(const ResultRecord&) const = default;
};

using RecordKey = std::tuple<std::size_t, std::size_t, Quantity>;

inline RecordKey key_of(const ResultRecord& r) { return {r.n, r.k, r.quantity}; }

/// Current UTC time as YYYY-MM-DDThh:mm:ssZ.
inline std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline nlohmann::json to_json(const ResultRecord& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["quantity"] = r.quantity;
    j["value"] = r.value;
    if (r.lex_min_set) {
        auto sets = nlohmann::json::array();
        for (const auto& p : r.lex_min_set->perms()) {
            auto entries = nlohmann::json::array();
            for (auto e : p.entries()) entries.push_back(static_cast<int>(e));
            sets.push_back(std::move(entries));
        }
        j["lex_min_set"] = std::move(sets);
    } else {
        j["lex_min_set"] = nullptr;
    }
    j["method"] = r.method;
    j["enumerated"] = r.enumerated;
    j["elapsed_ms"] = r.elapsed_ms;
    j["created_at"] = r.created_at;
    j["artifact_version"] = r.artifact_version;
    return j;
}

inline ResultRecord record_from_json(const nlohmann::json& j) {
    try {
        ResultRecord r;
        r.n = j.at("n").get<std::size_t>();
        r.k = j.at("k").get<std::size_t>();
        r.quantity = j.at("quantity").get<Quantity>();
        r.value = j.at("value").get<std::string>();
        parse_u128(r.value);
        if (const auto& s = j.at("lex_min_set"); !s.is_null()) {
            std::vector<Permutation> perms;
            for (const auto& p : s) {
                const auto entries = p.get<std::vector<int>>();
                perms.push_back(Permutation::from_entries(std::span<const int>(entries)));
            }
            r.lex_min_set = KSet(std::move(perms));
        }
        r.method = j.at("method").get<Method>();
        r.enumerated = j.at("enumerated").get<std::uint64_t>();
        r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
        r.created_at = j.at("created_at").get<std::string>();
        r.artifact_version = j.at("artifact_version").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, std::string("bad store record: ") + e.what());
    }
}

/// Appends one record as a single JSON line.
inline void store_append(const ResultRecord& record, const std::string& path) {
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw error(errc::io_failure, "cannot open store " + path);
    out << to_json(record).dump() << '\n';
    out.flush();
    if (!out) throw error(errc::io_failure, "write failed on store " + path);
}

/// Every record in file order.  A missing file reads as empty.
inline std::vector<ResultRecord> read_store(const std::string& path) {
    std::vector<ResultRecord> out;
    std::ifstream in(path, std::ios::binary);
    if (!in) return out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) throw error(errc::parse_error, path + ":" + std::to_string(lineno) + ": not JSON");
        out.push_back(record_from_json(j));
    }
    return out;
}

/// Latest record per logical key.  Records for one key must agree on value.
inline std::map<RecordKey, ResultRecord> load_store(const std::string& path) {
    std::map<RecordKey, ResultRecord> latest;
    for (auto& r : read_store(path)) {
        const auto key = key_of(r);
        if (auto it = latest.find(key); it != latest.end()) {
            if (it->second.value != r.value)
                throw error(errc::conflict_detected, "n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) +
                                                         ": stored " + it->second.value + " vs " + r.value);
            it->second = std::move(r);
        } else {
            latest.emplace(key, std::move(r));
        }
    }
    return latest;
}

// ---------------------------------------------------------------------------
// Integer sequences

struct SequenceRecord {
    std::string oeis_id;
    long offset = 1;
    std::vector<std::string> values;

    bool operator==(const SequenceRecord&) const = default;
};

enum class SequenceKind { Column, Antidiagonal };

struct SequenceInfo {
    std::string_view oeis_id;
    SequenceKind kind;
    std::size_t k;  // column sequences only
    long offset;
};

/// v_min columns k = 3..8 indexed by n, and the antidiagonal reading.
inline constexpr SequenceInfo known_sequences[] = {
    {"A070735", SequenceKind::Column, 3, 1},      {"A070736", SequenceKind::Column, 4, 1},
    {"A260356", SequenceKind::Column, 5, 1},      {"A260357", SequenceKind::Column, 6, 1},
    {"A260358", SequenceKind::Column, 7, 1},      {"A260359", SequenceKind::Column, 8, 1},
    {"A260355", SequenceKind::Antidiagonal, 0, 1},
};

inline const SequenceInfo& sequence_info(std::string_view id) {
    for (const auto& s : known_sequences)
        if (s.oeis_id == id) return s;
    throw error(errc::invalid_config, "unknown sequence " + std::string(id));
}

inline std::string emit_bfile(const SequenceRecord& seq) {
    if (seq.values.empty()) throw error(errc::empty_input, "sequence " + seq.oeis_id + " has no terms");
    std::string out;
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        out += std::to_string(seq.offset + static_cast<long>(i));
        out += ' ';
        out += seq.values[i];
        out += '\n';
    }
    return out;
}

/// (index, value) pairs of a b-file; '#' comment lines and blank lines are skipped.
inline std::vector<std::pair<long, std::string>> parse_bfile_terms(std::string_view text) {
    std::vector<std::pair<long, std::string>> terms;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string index, value, extra;
        fields >> index >> value;
        const bool bad_index = index.empty() || index.find_first_not_of("-0123456789") != std::string::npos;
        const bool bad_value = value.empty() || value.find_first_not_of("-0123456789") != std::string::npos;
        if (bad_index || bad_value || (fields >> extra))
            throw error(errc::parse_error, "b-file line " + std::to_string(lineno) + ": \"" + line + "\"");
        terms.emplace_back(std::stol(index), value);
    }
    return terms;
}

/// Parses a b-file whose indices are consecutive.
inline SequenceRecord parse_bfile(std::string_view text, std::string oeis_id = {}) {
    const auto terms = parse_bfile_terms(text);
    SequenceRecord seq{std::move(oeis_id), terms.empty() ? 1 : terms.front().first, {}};
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].first != seq.offset + static_cast<long>(i))
            throw error(errc::parse_error, "b-file indices not consecutive at " + std::to_string(terms[i].first));
        seq.values.push_back(terms[i].second);
    }
    return seq;
}

using CellTable = std::map<std::pair<std::size_t, std::size_t>, Value>;

enum class Direction { NAscending, NDescending };

/// Reading order of A260355 within each antidiagonal n + k = d.
inline constexpr Direction default_antidiagonal_direction = Direction::NAscending;

/// Flattens antidiagonals d = n + k = 2 .. depth + 1 of the (n, k) table.
inline SequenceRecord antidiagonal_sequence(const CellTable& table, std::size_t depth, Direction direction) {
    SequenceRecord seq{"A260355", 1, {}};
    for (std::size_t d = 2; d <= depth + 1; ++d) {
        for (std::size_t t = 1; t < d; ++t) {
            const std::size_t n = direction == Direction::NAscending ? t : d - t;
            const std::size_t k = d - n;
            const auto it = table.find({n, k});
            if (it == table.end())
                throw error(errc::missing_cell, "no value for n=" + std::to_string(n) + " k=" + std::to_string(k));
            seq.values.push_back(to_string(it->second));
        }
    }
    return seq;
}

/// Number of antidiagonals needed for the first `terms` terms.
inline std::size_t antidiagonal_depth_for(std::size_t terms) {
    std::size_t depth = 0, covered = 0;
    while (covered < terms) covered += ++depth;
    return depth;
}

struct Mismatch {
    long index = 0;
    std::string computed;
    std::string reference;
};

struct VerifyReport {
    std::size_t compared = 0;
    std::size_t matched = 0;
    std::optional<Mismatch> first_mismatch;
    std::vector<long> only_computed;
    std::vector<long> only_reference;

    bool ok() const noexcept { return !first_mismatch; }
};

/// Index-by-index comparison over the overlap of seq and a reference b-file.
inline VerifyReport verify_against_reference(const SequenceRecord& seq, std::string_view reference) {
    std::map<long, std::string> ref;
    for (auto& [i, v] : parse_bfile_terms(reference)) ref[i] = v;
    VerifyReport report;
    for (std::size_t t = 0; t < seq.values.size(); ++t) {
        const long index = seq.offset + static_cast<long>(t);
        const auto it = ref.find(index);
        if (it == ref.end()) {
            report.only_computed.push_back(index);
            continue;
        }
        ++report.compared;
        if (it->second == seq.values[t]) ++report.matched;
        else if (!report.first_mismatch) report.first_mismatch = Mismatch{index, seq.values[t], it->second};
        ref.erase(it);
    }
    for (const auto& [i, v] : ref) report.only_reference.push_back(i);
    return report;
}

inline std::string describe(const VerifyReport& r) {
    std::string s = std::to_string(r.compared) + " compared, " + std::to_string(r.matched) + " matched";
    if (r.first_mismatch)
        s += ", first mismatch at index " + std::to_string(r.first_mismatch->index) + ": computed " +
             r.first_mismatch->computed + " reference " + r.first_mismatch->reference;
    if (!r.only_computed.empty()) s += ", " + std::to_string(r.only_computed.size()) + " only computed";
    if (!r.only_reference.empty()) s += ", " + std::to_string(r.only_reference.size()) + " only in reference";
    return s;
}

/// CSV with header "n/k,1,..,K" and one row per n = 1..N; absent cells are empty.
inline std::string render_table(std::span<const ResultRecord> records, Quantity quantity) {
    std::map<std::pair<std::size_t, std::size_t>, std::string> cells;
    std::size_t max_n = 0, max_k = 0;
    for (const ResultRecord& r : records) {
        if (r.quantity != quantity) continue;
        cells[{r.n, r.k}] = r.value;
        max_n = std::max(max_n, r.n);
        max_k = std::max(max_k, r.k);
    }
    std::string out = "n/k";
    for (std::size_t k = 1; k <= max_k; ++k) out += ',' + std::to_string(k);
    out += '\n';
    for (std::size_t n = 1; n <= max_n; ++n) {
        out += std::to_string(n);
        for (std::size_t k = 1; k <= max_k; ++k) {
            out += ',';
            if (auto it = cells.find({n, k}); it != cells.end()) out += it->second;
        }
        out += '\n';
    }
    return out;
}

} // namespace permprod
