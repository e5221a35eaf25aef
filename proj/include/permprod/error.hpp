#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permprod {

enum class errc {
    duplicate_entry,
    out_of_range,
    empty_input,
    overflow,
    completion_explosion,
    invalid_config,
    instance_too_large,
    conflict_detected,
    parse_error,
    missing_cell,
    io_failure,
};

/// Name used in diagnostics; stable, printed verbatim by the CLI.
constexpr std::string_view error_name(errc code) noexcept {
    switch (code) {
        case errc::duplicate_entry: return "DuplicateEntry";
        case errc::out_of_range: return "OutOfRange";
        case errc::empty_input: return "EmptyInput";
        case errc::overflow: return "Overflow";
        case errc::completion_explosion: return "CompletionExplosion";
        case errc::invalid_config: return "InvalidConfig";
        case errc::instance_too_large: return "InstanceTooLarge";
        case errc::conflict_detected: return "ConflictDetected";
        case errc::parse_error: return "ParseError";
        case errc::missing_cell: return "MissingCell";
        case errc::io_failure: return "IoFailure";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace permprod
