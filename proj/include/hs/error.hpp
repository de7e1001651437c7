#pragma once

#include <stdexcept>
#include <string>

namespace hs {

// Mathematical precondition failures: non-units, ill-defined maps, exceeded caps.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed polynomial text or JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Buchberger completion ran past the configured degree cap.
class NonConfluent : public DomainError {
public:
    using DomainError::DomainError;
};

class OrderExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

// A closed-form result failed its own defining identity; always a kernel bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hs
