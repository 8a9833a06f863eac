#pragma once

#include <stdexcept>
#include <string>

namespace constacode {

// Error categories map onto CLI exit codes: Parameter -> 2, Budget -> 3,
// Verification -> 1.
enum class ErrorKind {
    Parameter,
    Budget,
    Verification,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_param(const std::string& what) { throw Error(ErrorKind::Parameter, what); }
[[noreturn]] inline void fail_budget(const std::string& what) { throw Error(ErrorKind::Budget, what); }
[[noreturn]] inline void fail_verify(const std::string& what) { throw Error(ErrorKind::Verification, what); }
[[noreturn]] inline void fail_internal(const std::string& what) { throw Error(ErrorKind::Internal, what); }

}  // namespace constacode
