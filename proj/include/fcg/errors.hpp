#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fcg {

/// Input tables have inconsistent dimensions or malformed content.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (bad m-value, x out of range, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An internal guarantee failed; signals a bug or a malformed instance.
struct IntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Two vertices lie in different components.
struct NoPathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A truncated search could not settle a verdict within its cap.
struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Frame transport around a cycle fails to close; carries the witness cycle.
struct NotRealisableError : std::runtime_error {
    std::vector<int> witness_cycle;
    NotRealisableError(const std::string& what, std::vector<int> cycle)
        : std::runtime_error(what), witness_cycle(std::move(cycle)) {}
};

/// Arrangement violates a structural precondition (non-simplicial chamber,
/// inessential form set, colouring conflict).
struct UnsupportedArrangement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fcg
