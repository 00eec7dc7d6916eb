#pragma once

#include <stdexcept>
#include <string>

namespace arcval {

/// Error taxonomy shared by the library and the CLI.
/// Exit codes: 2 = bad input or violated precondition, 3 = declared
/// capability limit, 4 = internal invariant failure.
class Error : public std::runtime_error {
public:
    Error(std::string msg, int code) : std::runtime_error(std::move(msg)), code_(code) {}
    int exit_code() const { return code_; }

private:
    int code_;
};

class InputError : public Error {
public:
    explicit InputError(std::string msg) : Error(std::move(msg), 2) {}
};

class CapabilityError : public Error {
public:
    explicit CapabilityError(std::string msg) : Error(std::move(msg), 3) {}
};

class InternalError : public Error {
public:
    explicit InternalError(std::string msg) : Error(std::move(msg), 4) {}
};

} // namespace arcval
