#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace poskit {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the operation's domain (n < 1, unknown prime, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested semidirect action is not a homomorphism:
/// gcd(u, a) != 1 or u^b != 1 (mod a).
class InvalidActionError : public Error {
public:
    using Error::Error;
};

/// The group order exceeds the configured enumeration cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

class NotPrimeError : public Error {
public:
    using Error::Error;
};

/// An integer literal or arithmetic result does not fit the supported range.
class IntegerOverflowError : public Error {
public:
    using Error::Error;
};

/// Parse failure in the group-spec grammar. Carries the byte offset of the
/// offending input and the tokens that would have been accepted there.
class SpecSyntaxError : public Error {
public:
    SpecSyntaxError(std::size_t offset, std::vector<std::string> expected);

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

} // namespace poskit
