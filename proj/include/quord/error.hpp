#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace quord {

using Element = std::size_t;
using Pair = std::pair<Element, Element>;

/// Base of every error the library raises on bad caller input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range coordinates, mismatched ground sets,
/// unparsable files.
class InputError : public Error {
public:
    using Error::Error;
};

/// A relation handed to a checking constructor fails one of the axioms of
/// the requested type. `axiom` names the first failed axiom in the order
/// reflexive, transitive, antisymmetric, total, symmetric, halfspace.
class ValidationError : public Error {
public:
    ValidationError(std::string axiom, Pair witness, std::string detail)
        : Error("relation is not " + axiom + ": " + detail),
          axiom_(std::move(axiom)),
          witness_(witness) {}

    const std::string& axiom() const noexcept { return axiom_; }
    Pair witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    Pair witness_;
};

/// An operation's hypothesis does not hold for the given arguments.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what, std::optional<Pair> witness = std::nullopt)
        : Error(what), witness_(witness) {}

    std::optional<Pair> witness() const noexcept { return witness_; }

private:
    std::optional<Pair> witness_;
};

/// The instance exceeds a configured size cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Seeing one means a bug in this
/// library (or a false mathematical claim), never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool condition, const char* what) {
    if (!condition) {
        throw InvariantViolation(what);
    }
}

inline std::string format_pair(Pair p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace quord
