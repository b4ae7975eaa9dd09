#pragma once

#include <stdexcept>
#include <string>

namespace torgit {

/// Malformed or inconsistent input (CLI exit code 1).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A guard refused the computation: support-count limit, step limit,
/// exhausted search (CLI exit code 2).
class ComputationDeclined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold did not (CLI exit code 3).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace torgit
