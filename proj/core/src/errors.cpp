#include "blockers/errors.hpp"

namespace blockers {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::index_out_of_range: return "index-out-of-range";
    case errc::invalid_spec: return "invalid-spec";
    case errc::order_mismatch: return "order-mismatch";
    case errc::order_too_large: return "order-too-large";
    case errc::range_error: return "range-error";
    case errc::parse_error: return "parse-error";
    }
    return "unknown";
}

void throw_error(errc code, const std::string& message) {
    throw Error(code, std::string(errc_name(code)) + ": " + message);
}

} // namespace blockers
