#pragma once

#include <stdexcept>
#include <string>

namespace parahoric {

// Raised when input data violates a structural precondition (bad root datum,
// action not preserving the root set, character not killing a relation, ...).
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed textual input (JSON payloads, --param strings).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration (group closure, orbit walk) exceeds its bound.
struct limit_error : std::runtime_error {
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised for a name not present in the built-in catalog.
struct unknown_name_error : std::runtime_error {
    explicit unknown_name_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace parahoric
