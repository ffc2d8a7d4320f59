#pragma once

#include <stdexcept>
#include <string>

namespace fibercalc {

// Exit-code conventions shared with the CLI: 2 = usage, 3 = computation failed.
// A check that evaluates to "false" is not an error; callers return 1 themselves.
struct Error : std::runtime_error {
    int exit_code;
    Error(std::string msg, int code) : std::runtime_error(std::move(msg)), exit_code(code) {}
};

struct UsageError : Error {
    explicit UsageError(std::string msg) : Error(std::move(msg), 2) {}
};

struct ComputationError : Error {
    explicit ComputationError(std::string msg) : Error(std::move(msg), 3) {}
};

struct SurfaceMismatchError : UsageError {
    explicit SurfaceMismatchError(std::string msg) : UsageError(std::move(msg)) {}
};

struct UnknownGeneratorError : UsageError {
    explicit UnknownGeneratorError(std::string msg) : UsageError(std::move(msg)) {}
};

struct NotLiftableError : ComputationError {
    explicit NotLiftableError(std::string msg) : ComputationError(std::move(msg)) {}
};

struct StepCollapseError : ComputationError {
    explicit StepCollapseError(std::string msg) : ComputationError(std::move(msg)) {}
};

struct ArcIdentificationError : ComputationError {
    explicit ArcIdentificationError(std::string msg) : ComputationError(std::move(msg)) {}
};

}  // namespace fibercalc
