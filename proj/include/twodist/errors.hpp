#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twodist {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on a numeric argument failed (dimension, weight, s, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Two objects that must share a shape (ambient size, weight, length) do not.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A point set contains duplicates where distinct points are required.
class DegenerateSetError : public Error {
public:
    using Error::Error;
};

/// Parameters that do not satisfy the integrality conditions of the k-pairing.
class NotAdmissible : public Error {
public:
    using Error::Error;
};

/// Malformed JSON / CSV input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An exhaustive search would exceed its configured budget. Raised before any
/// verdict is produced, so a universally quantified claim is never reported on
/// a truncated scan.
class ResourceCapExceeded : public Error {
public:
    ResourceCapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
        : Error(what + " (requires " + std::to_string(required) + ", cap " + std::to_string(cap) + ")"),
          required_(required), cap_(cap) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

}  // namespace twodist
