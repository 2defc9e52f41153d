#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace waring {

// Arithmetic left the unsigned 64-bit range.
class RangeError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotFoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// The computation ran but its input window is too small to decide.
class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Refusal to allocate beyond the configured RAM cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An n* certificate could not be completed; `j` is the first missing part count.
class CertificateError : public std::runtime_error {
public:
    CertificateError(const std::string& what, unsigned j)
        : std::runtime_error(what), j_(j) {}
    unsigned j() const noexcept { return j_; }

private:
    unsigned j_;
};

}  // namespace waring
