#pragma once

#include <stdexcept>
#include <string>

namespace cdatc {

enum class ErrorCode {
    index_out_of_range,
    self_loop,
    duplicate_edge,
    disconnected_graph,
    dimension_mismatch,
    missing_neighbor_estimate,
    weight_constraint_violated,
    non_finite_input,
    config_invalid,
    parse_error,
    validation_error,
    window_out_of_range,
    unknown_preset,
    no_data,
    io_error,
};

const char* error_code_name(ErrorCode code);

class SimError : public std::runtime_error {
public:
    SimError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code),
          message_(message) {}

    ErrorCode code() const { return code_; }
    const std::string& message() const { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw SimError(code, message);
}

} // namespace cdatc
