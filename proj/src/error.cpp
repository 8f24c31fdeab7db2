#include "kundupack/error.hpp"

namespace kundu {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::not_graphic: return "NotGraphic";
        case ErrorKind::not_feasible: return "NotFeasible";
        case ErrorKind::best_effort_failed: return "BestEffortFailed";
        case ErrorKind::invalid_swap: return "InvalidSwap";
        case ErrorKind::trace_mismatch: return "TraceMismatch";
        case ErrorKind::precondition_violated: return "PreconditionViolated";
        case ErrorKind::progress_stalled: return "ProgressStalled";
        case ErrorKind::too_large: return "TooLarge";
        case ErrorKind::parse_error: return "ParseError";
        case ErrorKind::invalid_input: return "InvalidInput";
    }
    return "Unknown";
}

std::string_view to_string(SwapFailure reason) {
    switch (reason) {
        case SwapFailure::distinctness: return "distinctness";
        case SwapFailure::removed_present: return "removed-present";
        case SwapFailure::added_absent: return "added-absent";
        case SwapFailure::cross_layer: return "cross-layer";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {

std::string swap_message(SwapFailure reason, std::optional<std::size_t> step) {
    std::string msg = "reason=" + std::string(to_string(reason));
    if (step) msg = "step=" + std::to_string(*step) + " " + msg;
    return msg;
}

}  // namespace

InvalidSwapError::InvalidSwapError(SwapFailure reason, std::optional<std::size_t> step)
    : Error(ErrorKind::invalid_swap, swap_message(reason, step)), reason_(reason), step_(step) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error(ErrorKind::parse_error,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace kundu
