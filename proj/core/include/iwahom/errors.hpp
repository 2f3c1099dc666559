#pragma once

#include <stdexcept>
#include <string>

namespace iwahom {

/// A configured size guard tripped (matrix too large, group too big, ...).
struct resource_bound : std::runtime_error {
    explicit resource_bound(const std::string& what) : std::runtime_error(what) {}
};

/// A computation could not be certified at the working precision / degree cap.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent user input.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace iwahom
