#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ortho_greedy {

// Input document or representation violates an invariant. Every violation
// found is listed, not only the first.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Input has degree-1 vertices or cut vertices but the operation needs a
// biconnected graph.
class NotBiconnectedError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A generator primitive cannot be applied at the requested place.
class IllegalOperationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The ordering handed to a solver is not a good st-ordering.
class InvalidOrderingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The instance provably has no greedy drawing.
class NotRealizableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Coordinates do not fit the drawing's integer range.
class CoordinateOverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An invariant that the theory guarantees was violated; always a bug or an
// input that slipped past validation.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ortho_greedy
