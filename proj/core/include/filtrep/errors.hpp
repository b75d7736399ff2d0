#pragma once

#include <stdexcept>
#include <string>

namespace filtrep {

// Error ids are stable strings so the CLI can emit machine-readable diagnostics.

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg)
        : std::runtime_error(msg) {}
    static constexpr const char* id = "validation";
};

struct shape_error : std::runtime_error {
    explicit shape_error(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr const char* id = "shape";
};

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr const char* id = "domain";
};

// Enumeration exceeded a configured cap; carries the estimated work size.
struct resource_error : std::runtime_error {
    resource_error(const std::string& msg, double estimate_)
        : std::runtime_error(msg), estimate(estimate_) {}
    double estimate;
    static constexpr const char* id = "resource";
};

}  // namespace filtrep
