#pragma once

#include <stdexcept>
#include <string>

namespace edgesub {

// Malformed input data (edge-list files, JSON configs).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation exceeds a configured budget or size guard.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// API misuse: invalid parameters, mismatched patterns, unknown names.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Declared property metadata contradicts empirical probing.
struct metadata_error : std::runtime_error {
    explicit metadata_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edgesub
