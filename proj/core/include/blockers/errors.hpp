#pragma once

#include <stdexcept>
#include <string>

namespace blockers {

/// Failure categories surfaced by the library. The CLI maps anything in
/// this enum to exit code 2 (usage/input error); budget exhaustion is
/// reported through result flags, not exceptions.
enum class errc {
    index_out_of_range,
    invalid_spec,
    order_mismatch,
    order_too_large,
    range_error,
    parse_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] void throw_error(errc code, const std::string& message);

} // namespace blockers
