#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kundu {

enum class ErrorKind {
    not_graphic,
    not_feasible,
    best_effort_failed,
    invalid_swap,
    trace_mismatch,
    precondition_violated,
    progress_stalled,
    too_large,
    parse_error,
    invalid_input,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Conditions checked in this order; the first failing one is reported.
enum class SwapFailure {
    distinctness,
    removed_present,
    added_absent,
    cross_layer,
};

std::string_view to_string(SwapFailure reason);

class InvalidSwapError : public Error {
public:
    InvalidSwapError(SwapFailure reason, std::optional<std::size_t> step = std::nullopt);

    SwapFailure reason() const noexcept { return reason_; }
    std::optional<std::size_t> step() const noexcept { return step_; }

private:
    SwapFailure reason_;
    std::optional<std::size_t> step_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace kundu
