#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hforge {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or unresolvable input (bad JSON, unknown labels, wrong shapes).
class InputError : public Error {
public:
    using Error::Error;
};

// A mathematical precondition or validation failed (non-cocycle, not Galois,
// division by zero, missing root of unity, ...).
class MathError : public Error {
public:
    using Error::Error;
};

enum class Status { pass, fail, indeterminate, skipped, unsupported };

constexpr std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::indeterminate: return "indeterminate";
    case Status::skipped: return "skipped";
    case Status::unsupported: return "unsupported";
    }
    return "unknown";
}

inline Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

}  // namespace hforge
