#pragma once

#include <stdexcept>
#include <string>

namespace mcq {

// Thrown when two independently computed routes to the same quantity disagree.
struct identity_error : std::runtime_error {
    explicit identity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an enumeration would exceed a configured size guard.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an input file fails structural validation (axioms, schema).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mcq
