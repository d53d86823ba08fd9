#pragma once

#include <stdexcept>
#include <string>

namespace dgeo {

// Bad user input: malformed files, out-of-range ids, invalid parameters.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A function value landed exactly on the level being cut.
struct degenerate_level_error : input_error {
    explicit degenerate_level_error(const std::string& msg) : input_error(msg) {}
};

// Resource guard tripped (clique or cycle count cap).
struct enumeration_limit_error : std::runtime_error {
    explicit enumeration_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dgeo
