#pragma once

#include <stdexcept>
#include <string>

namespace zeon {

enum class ErrorKind {
    InvalidArgument,   // malformed input, bad index, wrong arity
    ContextMismatch,
    ZeroBody,          // series that needs an invertible body
    NonHermitian,
    Unnormalized,
    Internal,          // a consistency guard tripped
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace zeon
