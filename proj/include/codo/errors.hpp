#pragma once

#include <stdexcept>
#include <string>

namespace codo {

/** Base class for all library errors. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

class InvalidRational : public Error {
public:
    explicit InvalidRational(const std::string& msg) : Error(msg) {}
};

// Arithmetic combined elements of different coefficient rings
// (polynomial vs truncated Laurent) or different extension sessions.
class MixedRing : public Error {
public:
    explicit MixedRing(const std::string& msg) : Error(msg) {}
};

// Product of two elements that both carry unknown constants; everything in
// the construction is linear in the integration constants, so this always
// indicates a pipeline bug rather than bad input.
class NonlinearInUnknowns : public Error {
public:
    explicit NonlinearInUnknowns(const std::string& msg) : Error(msg) {}
};

class NonIntegrableTerm : public Error {
public:
    explicit NonIntegrableTerm(const std::string& msg) : Error(msg) {}
};

class TruncationTooShort : public Error {
public:
    explicit TruncationTooShort(const std::string& msg) : Error(msg) {}
};

class UnboundUnknown : public Error {
public:
    explicit UnboundUnknown(const std::string& msg) : Error(msg) {}
};

class SizeMismatch : public Error {
public:
    explicit SizeMismatch(const std::string& msg) : Error(msg) {}
};

// E is not invertible in the coefficient ring (non-constant or zero diagonal).
class NonInvertibleE : public Error {
public:
    explicit NonInvertibleE(const std::string& msg) : Error(msg) {}
};

class InconsistentSystem : public Error {
public:
    explicit InconsistentSystem(const std::string& msg) : Error(msg) {}
};

class NoRelationFound : public Error {
public:
    explicit NoRelationFound(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class VersionMismatch : public Error {
public:
    explicit VersionMismatch(const std::string& msg) : Error(msg) {}
};

} // namespace codo
