#pragma once

#include <stdexcept>
#include <string>

namespace signings {

/// Failure categories. The CLI maps each one onto a process exit code.
enum class ErrorKind {
    invalid_argument,
    parse,
    reducible,
    base_mismatch,
    cap_exceeded,
    order_mismatch,
    no_closed_path,
    solver,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::reducible: return "reducible input";
    case ErrorKind::base_mismatch: return "base mismatch";
    case ErrorKind::cap_exceeded: return "cap exceeded";
    case ErrorKind::order_mismatch: return "order mismatch";
    case ErrorKind::no_closed_path: return "no closed path";
    case ErrorKind::solver: return "solver failure";
    }
    return "unknown";
}

} // namespace signings
