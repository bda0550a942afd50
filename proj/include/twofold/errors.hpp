#pragma once

#include <stdexcept>
#include <string>

namespace twofold {

// Malformed or out-of-range input (bad graph6, bad group table, bad CLI args).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called on data that violates its stated precondition.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (search node budget, closure cap, oracle degree cap) was hit.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A checked theorem failed; this always signals an implementation bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twofold
