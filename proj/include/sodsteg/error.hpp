#pragma once

#include <stdexcept>
#include <string>

namespace sodsteg {

enum class Errc {
    io_failure,
    malformed_header,
    unsupported_format,
    unsupported_maxval,
    truncated_payload,
    bad_dimensions,
    invalid_argument,
    dimension_mismatch,
    delta_out_of_range,
    kernel_too_large,
    payload_infeasible,
    length_mismatch,
    no_convergence,
};

const char* to_string(Errc code) noexcept;

// Every contract violation in the library is reported through this type; the
// code lets callers (and the CLI) distinguish failure classes without parsing
// the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace sodsteg
