/* errors.hpp -- exception types shared across skeinfill. */

#pragma once

#include <stdexcept>
#include <string>

namespace skein {

/* Malformed or semantically invalid input data (files, elements, presentations). */
struct invalid_input_error : std::runtime_error {
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

/* Requested surgery slope is parallel to an annihilator polygon edge. */
struct inadmissible_slope_error : std::runtime_error {
    explicit inadmissible_slope_error(const std::string& what) : std::runtime_error(what) {}
};

/* Broken internal invariant: certificate mismatch, transform drift, descent failure. */
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace skein
